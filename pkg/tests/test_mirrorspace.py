import math

import numpy as np
import pytest

from mirrorqm import fock
from mirrorqm import mirrorspace as ms
from mirrorqm.biquat import Biquaternion, deviation, units
from mirrorqm.exact import ExactScalar
from mirrorqm.qmatrix import QMatrix

ONE, I, J, K = units(True)
Z = ONE * 0
S = ExactScalar.sqrt(2) / 2  # 1/sqrt 2


def test_mirror_norm_is_k_and_real_norm_is_one():
    for n in range(5):
        assert ms.inner(ms.mirror_ket(4, n), ms.mirror_ket(4, n)) == K
        assert ms.inner(ms.real_ket(4, n), ms.real_ket(4, n)) == ONE
    assert ms.inner(ms.mirror_ket(4, 1), ms.mirror_ket(4, 2)) == Z


def test_inner_by_hand():
    # bra of (x_I, x_R, x_J) is (x_J^m, x_R^m, x_I^m); for the mirror ket:
    # J^m/s * I/s + (I/s)^m * J/s = (J I - I J) / 2 = K
    assert (J * I - I * J) * ExactScalar.gaussian(1, 0) / 2 == K


def test_theta_skeleton_frozen():
    th = ms.theta_skeleton()
    assert th == QMatrix(((Z, I * S, Z), (-I * S, Z, -J * S), (Z, J * S, Z)))
    assert th.mirror_conj() == QMatrix(((Z, -J * S, Z), (J * S, Z, -I * S), (Z, I * S, Z)))


def test_theta_maps_real_to_mirror():
    th = ms.theta(5)
    for n in range(6):
        assert th.apply(ms.real_ket(5, n)) == ms.mirror_ket(5, n)


def test_theta_squared_is_identity_on_real():
    assert all(ms.theta_squared_factor(4, n) == ONE for n in range(5))


def test_norm_exchange():
    th = ms.theta(4)
    thm = th.mirror_conj()
    a, b = ms.real_ket(4, 2), ms.mirror_ket(4, 2)
    assert ms.inner(a, thm.apply(th.apply(a))) == K
    assert ms.inner(b, thm.apply(th.apply(b))) == ONE


@pytest.mark.parametrize("cutoff", [3, 8, 12])
def test_hamiltonian_block_diagonal(cutoff):
    h = ms.hamiltonian(cutoff)
    assert h.invalid == frozenset()
    assert ms.blocks_equal(h, ms.expected_hamiltonian(cutoff))


def test_hamiltonian_diagonal_frozen():
    h = ms.hamiltonian(3)
    diag = [complex(h.blocks[b][b][n, n].w) for b in range(3) for n in range(4)]
    assert diag == [0, -1, -2, -3, 0, 1, 2, 3, 0, -1, -2, -3]


def test_a_mirror_constraint_toggle():
    a, _ = fock.ladder_pos(4)
    dropped = ms.block_A_mirror(4, a_mirror=a)
    assert not ms.blocks_equal(dropped @ ms.block_A(4), ms.expected_hamiltonian(4))
    assert ms.blocks_equal(ms.block_A(4).mirror_conj(), ms.block_A_mirror(4))


def test_h_theta_anticommute_and_controls():
    assert ms.check_H_theta_anticommute(8).status == "pass"
    fill = ms.check_H_theta_anticommute(4, theta_op=ms.corrupted_theta(4, kind="fill"))
    assert fill.status == "fail"
    # frozen: ||H Theta + Theta H|| with the filled (R,R) entry is 2 * 4 / sqrt 2
    assert fill.max_abs_error == pytest.approx(4 * math.sqrt(2), rel=1e-12)
    sign = ms.check_H_theta_anticommute(4, theta_op=ms.corrupted_theta(4, kind="sign"))
    assert sign.max_abs_error == 0.0
    with pytest.raises(ValueError):
        ms.corrupted_theta(4, kind="other")


def test_component_energies():
    h = ms.hamiltonian(6)
    for n in range(7):
        mir = ms.component_energies(ms.mirror_ket(6, n), h)
        assert mir["I"] == mir["J"] == ONE * ExactScalar.gaussian(-n) / 2
        assert ms.component_energies(ms.real_ket(6, n), h)["R"] == ONE * n
        assert ms.level_energy_balance(6, n) == Z


def test_vacuum_energy_is_zero():
    vac = ms.combined_vacuum(5)
    assert ms.inner(vac, ms.hamiltonian(5).apply(vac)) == Z


def test_hole_states():
    n_til = ms.hole_number_operator(4)
    for h in ms.hole_states(4):
        assert n_til.apply(h.ket) == h.ket.mirror_part()
        assert ms.vev(h) == ONE
        assert ms.hole_self_inner(h) == -K
    with pytest.raises(ValueError):
        ms.hole_states(1)


def test_ghost_statistics_frozen_outcomes():
    plus, minus = ms.hole_states(4)
    for h in (plus, minus):
        got = ms.ghost_statistics_outcomes(h)
        assert got["lowering"] == (2.0, 0.0)
        assert got["raising_toward_vacuum"] == (0.0, 2.0)
        assert got["exclusion"] == (0.0, 0.0)
        report = ms.ghost_statistics_check(h)
        assert report.status == "flagged"


def test_phase_rotation():
    x = ms.mirror_ket(4, 1)
    base = ms.inner(x, x).to_float()
    for t in (0.1, 0.7, -1.3):
        assert deviation(ms.phase_norm(x, t, "I"), base) < 1e-14
        assert deviation(ms.phase_norm(x, t, "K"), K.to_float() * math.cos(2 * t)) < 1e-14
    y = ms.apply_phase(x, 0.4, "K")
    assert deviation(y.comp_I[1], (I * S).to_float() * np.exp(0.4j)) < 1e-15
    with pytest.raises(ValueError):
        ms.apply_phase(x, 0.1, "Q")


def test_completeness_factor():
    assert deviation(ms.completeness_factor(4), K.to_float()) < 1e-15
    # frozen: a K-rotation by theta scales the factor to cos(2 theta) K
    assert deviation(ms.completeness_factor(4, "K", 0.3), K.to_float() * math.cos(0.6)) < 1e-14


def test_cutoff_mismatch():
    with pytest.raises(ms.CutoffMismatch):
        ms.theta(3) @ ms.theta(4)
