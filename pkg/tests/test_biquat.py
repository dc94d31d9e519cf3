import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mirrorqm.biquat import (
    Biquaternion,
    commutator,
    deviation,
    expm_unit,
    from_matrix,
    quat_dagger,
    quat_mirror,
    to_matrix,
    units,
)
from mirrorqm.exact import ExactScalar

from conftest import int_biquaternion
from oracles import I_M, J_M, K_M, ONE, anti_transpose_conj, realize, unrealize

ONE_Q, I, J, K = units(True)

gauss = st.builds(ExactScalar.gaussian, st.integers(-6, 6), st.integers(-6, 6))
biquats = st.builds(Biquaternion, gauss, gauss, gauss, gauss)


def as_complex(m):
    return np.array(m, dtype=object).astype(complex)


def test_units_square_to_minus_one():
    for u in (I, J, K):
        assert u * u == -ONE_Q


def test_product_table_matches_pauli_oracle():
    mats = {"I": I_M, "J": J_M, "K": K_M}
    quats = {"I": I, "J": J, "K": K}
    for a in "IJK":
        for b in "IJK":
            expect = unrealize(mats[a] @ mats[b])
            got = (quats[a] * quats[b]).to_float()
            assert deviation(got, Biquaternion(*expect)) < 1e-15


def test_ij_is_minus_k():
    # frozen: I J = (i tau1)(i tau2) = -tau1 tau2 = -i tau3 = -K
    assert I * J == -K
    assert commutator(I, J) == K * (-2)


def test_ijk_is_plus_one_in_this_realization():
    assert I * J * K == ONE_Q
    assert np.allclose(I_M @ J_M @ K_M, ONE)


def test_j_realization():
    assert np.array_equal(as_complex(to_matrix(J)), np.array([[0, 1], [-1, 0]], dtype=complex))


def test_mirror_of_complex_k():
    q = Biquaternion(*(ExactScalar.gaussian(0) for _ in range(3)), ExactScalar.gaussian(2, 3))
    assert quat_mirror(q) == K * ExactScalar.gaussian(2, -3)


def test_dagger_of_i():
    assert quat_dagger(I) == -I
    assert np.allclose(as_complex(to_matrix(quat_dagger(I))), I_M.conj().T)


def test_unit_mirror_table():
    assert quat_mirror(I) == -I
    assert quat_mirror(J) == J
    assert quat_mirror(K) == K
    assert J * quat_mirror(J) == -ONE_Q
    assert K * quat_mirror(K) == -ONE_Q
    assert I * quat_mirror(I) == ONE_Q


def test_from_matrix_rejects_bad_shape():
    with pytest.raises(ValueError):
        from_matrix(np.eye(3))


def test_expm_unit():
    e = expm_unit(math.pi / 2, K.to_float())
    assert deviation(e, K.to_float()) < 1e-15
    with pytest.raises(ValueError):
        expm_unit(0.1, ONE_Q)


def test_scalar_times_block_object_is_not_captured():
    class Other:
        def __rmul__(self, q):
            return "other"
    assert I * Other() == "other"


@settings(max_examples=300)
@given(biquats, biquats)
def test_product_matches_matrix_oracle(a, b):
    assert np.allclose(realize((a * b).coeffs), realize(a.coeffs) @ realize(b.coeffs))


@settings(max_examples=300)
@given(biquats)
def test_mirror_is_anti_transpose_conjugate(q):
    assert np.array_equal(realize(quat_mirror(q).coeffs), anti_transpose_conj(realize(q.coeffs)))


@settings(max_examples=300)
@given(biquats)
def test_dagger_is_conjugate_transpose(q):
    assert np.array_equal(realize(quat_dagger(q).coeffs), realize(q.coeffs).conj().T)


@settings(max_examples=300)
@given(biquats, biquats)
def test_mirror_reverses_products(a, b):
    assert quat_mirror(a * b) == quat_mirror(b) * quat_mirror(a)
    assert quat_mirror(quat_mirror(a)) == a


def test_roundtrip_random(rng):
    for _ in range(1000):
        q = int_biquaternion(rng)
        assert from_matrix(to_matrix(q)) == q
