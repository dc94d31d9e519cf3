"""One test per acceptance criterion, each printing a single pass/fail line."""

import json
import math
import random
import subprocess
import sys

import pytest

from mirrorqm import fieldstat as fs
from mirrorqm import fock
from mirrorqm import mirrorspace as ms
from mirrorqm.biquat import Biquaternion, commutator, quat_mirror, units
from mirrorqm.checks import SuiteConfig, run_suite
from mirrorqm.exact import ExactScalar
from mirrorqm.qmatrix import QMatrix

from conftest import int_biquaternion

ONE, I, J, K = units(True)
Z = ONE * 0
CUTOFF = 12


@pytest.fixture
def record(capsys, request):
    def emit(ok: bool, detail: str = ""):
        with capsys.disabled():
            name = request.node.name.removeprefix("test_")
            print(f"\n[acceptance] {name}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
        assert ok, detail
    return emit


def test_criterion_01_quaternion_realization(record):
    ok = all(u * u == -ONE for u in (I, J, K)) and commutator(I, J) == K * (-2)
    ijk = I * J * K
    report = {r.check_id: r for r in run_suite(SuiteConfig(cutoff=3))}["biquat.ijk_sign"]
    ok = ok and ijk == ONE and report.status == "flagged"
    record(ok, f"IJK = {ijk!r}, reported {report.status}")


def test_criterion_02_mirror_laws(record):
    rng = random.Random(2)

    def rand(r, c):
        return QMatrix(tuple(tuple(int_biquaternion(rng) for _ in range(c)) for _ in range(r)))

    ok = True
    for _ in range(1000):
        r, k, c = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
        a, a2, b = rand(r, k), rand(r, k), rand(k, c)
        ok &= (a + a2).mirror_conj() == a.mirror_conj() + a2.mirror_conj()
        ok &= (a @ b).mirror_conj() == b.mirror_conj() @ a.mirror_conj()
        ok &= a.mirror_conj().mirror_conj() == a
    record(ok, "1000 exact random cases")


def test_criterion_03_unit_table(record):
    ok = (quat_mirror(I) == -I and quat_mirror(J) == J and quat_mirror(K) == K
          and J * quat_mirror(J) == -ONE and K * quat_mirror(K) == -ONE
          and I * quat_mirror(I) == ONE)
    record(ok, "I I^m = +1 recorded")


def test_criterion_04_norms(record):
    ok = True
    for i in range(CUTOFF + 1):
        for j in range(CUTOFF + 1):
            ok &= ms.inner(ms.mirror_ket(CUTOFF, i), ms.mirror_ket(CUTOFF, j)) == (K if i == j else Z)
            ok &= ms.inner(ms.real_ket(CUTOFF, i), ms.real_ket(CUTOFF, j)) == (ONE if i == j else Z)
    record(ok, f"levels 0..{CUTOFF}")


def test_criterion_05_hamiltonian(record):
    ok = True
    for n in (3, 8, 12):
        h = ms.hamiltonian(n)
        ok &= ms.blocks_equal(h, ms.expected_hamiltonian(n), h.valid)
    record(ok, "cutoffs 3, 8, 12")


def test_criterion_06_h_theta(record):
    good = ms.check_H_theta_anticommute(CUTOFF)
    bad = ms.check_H_theta_anticommute(CUTOFF, theta_op=ms.corrupted_theta(CUTOFF))
    record(good.status == "pass" and bad.status == "fail",
           f"control deviation {bad.max_abs_error:.3g}")


def test_criterion_07_norm_exchange(record):
    th = ms.theta(CUTOFF)
    thm = th.mirror_conj()
    ok = True
    for n in range(CUTOFF + 1):
        a, b = ms.real_ket(CUTOFF, n), ms.mirror_ket(CUTOFF, n)
        ok &= ms.inner(a, thm.apply(th.apply(a))) == ms.inner(b, b)
        ok &= ms.inner(b, thm.apply(th.apply(b))) == ms.inner(a, a)
    record(ok)


def test_criterion_08_mirror_ladder(record):
    at, at_dag = fock.ladder_neg(CUTOFF)
    c = fock.commutator(at, at_dag)
    ok = fock.equal_on(c, -fock.identity_op(at.tower), c.valid)
    spectrum = (-fock.number_op(at, at_dag)).spectrum()
    ok &= spectrum == [ExactScalar.gaussian(k) for k in range(CUTOFF + 1)]
    record(ok, f"interior levels {len(c.valid)}/{CUTOFF + 1}")


def test_criterion_09_hole_states(record):
    n_til = ms.hole_number_operator(CUTOFF)
    ok = True
    statuses = []
    for h in ms.hole_states(CUTOFF):
        ok &= n_til.apply(h.ket) == h.ket.mirror_part()
        ok &= ms.vev(h) == ONE
        report = ms.ghost_statistics_check(h)
        statuses.append(report.status)
        ok &= report.status == "flagged" and all(c in report.convention_notes for c in ms.GHOST_CONVENTIONS)
    record(ok, f"ghost checks {statuses}")


def test_criterion_10_delta_minus(record):
    rng = random.Random(10)
    times = [rng.uniform(0.01, 10.0) for _ in range(50)]
    anti = max(abs(fs.delta_minus(t) + fs.delta_minus(-t)) for t in times)
    rel = 0.0
    for eta in (1e-1, 1e-2, 1e-3):
        cfg = fs.RegulatorConfig(eta=eta)
        for t in times[:10] + [1.0]:
            exact = fs.closed_form(t, eta)
            rel = max(rel, abs(fs.delta_minus(t, cfg) - exact) / abs(exact))
    record(anti <= 1e-10 and rel <= 1e-4, f"antisymmetry {anti:.2e}, closed-form rel {rel:.2e}")


def test_criterion_11_statistics(record):
    table = {(s, b): fs._SIGN_TABLE[(s, b)] for s in fs.SPACES for b in fs.BRACKETS}
    ok = table == {
        ("subluminal", "commutator"): -1,
        ("subluminal", "anticommutator"): 1,
        ("supraluminal", "commutator"): 1,
        ("supraluminal", "anticommutator"): -1,
    }
    ok &= fs.select_statistics("subluminal") is fs.Statistics.BOSE_EINSTEIN
    ok &= fs.select_statistics("supraluminal") is fs.Statistics.FERMI_DIRAC
    record(ok)


def test_criterion_12_determinism(record):
    def run():
        return subprocess.run([sys.executable, "-m", "mirrorqm", "--format", "json", "--seed", "5"],
                              capture_output=True, check=False)
    a, b = run(), run()
    ok = a.returncode == 0 and a.stdout == b.stdout and len(json.loads(a.stdout)) >= 25
    record(ok, f"{len(a.stdout)} bytes")
