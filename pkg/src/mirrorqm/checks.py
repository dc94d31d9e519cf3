"""Registry of every identity the suite verifies, and :func:`run_suite`.

Each check function takes a :class:`SuiteConfig` and returns one or more
:class:`~mirrorqm.report.CheckReport`.  Random checks draw from a
``random.Random`` seeded from ``cfg.seed`` plus a per-check offset, so runs are
reproducible and independent of registration order.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Iterable

from . import fieldstat, fock
from . import mirrorspace as ms
from . import qmatrix as qm
from .biquat import (
    Biquaternion,
    commutator,
    deviation,
    from_matrix,
    quat_mirror,
    random_biquaternion,
    to_matrix,
    units,
)
from .exact import scalar
from .report import FLAGGED, PASS, CheckReport, judged

INVENTED = "invented"

DEFAULT_CUTOFF = 12
DEFAULT_TOL = 1e-10
DEFAULT_ETA = 1e-3
N_RANDOM = 1000


@dataclass(frozen=True)
class SuiteConfig:
    cutoff: int = DEFAULT_CUTOFF
    tol: float = DEFAULT_TOL
    eta: float = DEFAULT_ETA
    seed: int = 0
    mode: str = "exact"
    format: str = "text"
    corrupt_theta: bool = False

    def __post_init__(self):
        if self.cutoff < 3:
            raise ValueError("cutoff must be >= 3 (the hole-state checks need level -2)")
        if not self.tol >= 0:
            raise ValueError("tol must be non-negative")
        if not self.eta > 0:
            raise ValueError("eta must be positive")
        if self.mode not in ("exact", "float"):
            raise ValueError("mode must be 'exact' or 'float'")
        if self.format not in ("text", "json"):
            raise ValueError("format must be 'text' or 'json'")

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    @property
    def eff_tol(self) -> float:
        """Tolerance actually applied: zero in exact mode."""
        return 0.0 if self.exact else self.tol

    def rng(self, offset: int) -> random.Random:
        return random.Random(self.seed * 1_000_003 + offset)


def _same(a, b, cfg: SuiteConfig, dev: Callable) -> tuple[bool, float]:
    if cfg.exact:
        if a == b:
            return True, 0.0
        return False, dev(a, b)
    err = dev(a, b)
    return err <= cfg.tol, err


def _worst(results: Iterable[tuple[bool, float]]) -> tuple[bool, float]:
    ok, err = True, 0.0
    for o, e in results:
        ok = ok and o
        err = max(err, e)
    return ok, err


def _report(check_id: str, anchor: str, res: tuple[bool, float], notes: str = "") -> CheckReport:
    ok, err = res
    return judged(check_id, anchor, err, ok=ok, notes=notes)


# ---------------------------------------------------------------------------
# biquaternion checks
# ---------------------------------------------------------------------------

def _bq_same(a, b, cfg):
    return _same(a, b, cfg, deviation)


def check_units_square(cfg):
    one, I, J, K = units(cfg.exact)
    res = _worst(_bq_same(u * u, -one, cfg) for u in (I, J, K))
    return [_report("biquat.units_square", "I^2=J^2=K^2=-1", res)]


def check_unit_commutators(cfg):
    one, I, J, K = units(cfg.exact)
    two = scalar(2, cfg.exact)
    res = _worst([
        _bq_same(commutator(I, J), K * (-two), cfg),
        _bq_same(commutator(J, K), I * (-two), cfg),
        _bq_same(commutator(I, K), J * two, cfg),
    ])
    return [_report("biquat.unit_commutators", "[I,J]_- = 2 eps_12^3 K", res,
                    "eps_12^3 = -1 gives [I,J] = -2K; also [J,K] = -2I, [I,K] = +2J")]


def check_ijk_sign(cfg):
    one, I, J, K = units(cfg.exact)
    ijk = I * J * K
    err = deviation(ijk, -one)
    sign = "+1" if ijk == one or deviation(ijk, one) <= 1e-12 else repr(ijk)
    return [CheckReport("biquat.ijk_sign", "IJK=-1", FLAGGED, err,
                        f"Pauli realization gives IJK = {sign}; stated abstract relation is -1")]


def check_realization_roundtrip(cfg):
    rng = cfg.rng(11)
    res = _worst(
        _bq_same(from_matrix(to_matrix(q)), q, cfg)
        for q in (random_biquaternion(rng, cfg.exact) for _ in range(N_RANDOM))
    )
    one, I, J, K = units(cfg.exact)
    i = scalar(1j, cfg.exact)
    o, z = scalar(1, cfg.exact), scalar(0, cfg.exact)
    explicit = [
        (K, [[i, z], [z, -i]]),
        (J, [[z, o], [-o, z]]),
        (I, [[z, i], [i, z]]),
    ]
    res2 = _worst(
        (all(to_matrix(q)[r][c] == m[r][c] for r in range(2) for c in range(2)), 0.0)
        if cfg.exact else
        (max(abs(complex(to_matrix(q)[r][c]) - complex(m[r][c])) for r in range(2) for c in range(2))
         <= cfg.tol, 0.0)
        for q, m in explicit
    )
    return [_report("biquat.realization_roundtrip", "I=i tau_1, J=i tau_2, K=i tau_3",
                    _worst([res, res2]), f"{N_RANDOM} random samples plus explicit unit matrices")]


def check_product_homomorphism(cfg):
    rng = cfg.rng(12)

    def one_case():
        a, b = random_biquaternion(rng, cfg.exact), random_biquaternion(rng, cfg.exact)
        via_matrix = from_matrix(to_matrix(a) @ to_matrix(b))
        return _bq_same(a * b, via_matrix, cfg)

    return [_report("biquat.product_homomorphism", "I=i tau_1, J=i tau_2, K=i tau_3",
                    _worst(one_case() for _ in range(N_RANDOM)))]


def check_mirror_units(cfg):
    _, I, J, K = units(cfg.exact)
    res = _worst([
        _bq_same(quat_mirror(I), -I, cfg),
        _bq_same(quat_mirror(J), J, cfg),
        _bq_same(quat_mirror(K), K, cfg),
    ])
    return [_report("biquat.mirror_units", "I^m=-I, J^m=J, K^m=K", res)]


def check_quat_mirror_involution(cfg):
    rng = cfg.rng(13)
    res = _worst(
        _bq_same(quat_mirror(quat_mirror(q)), q, cfg)
        for q in (random_biquaternion(rng, cfg.exact) for _ in range(N_RANDOM))
    )
    return [_report("biquat.mirror_involution", INVENTED, res)]


def check_quat_mirror_antihomomorphism(cfg):
    rng = cfg.rng(14)

    def one_case():
        a, b = random_biquaternion(rng, cfg.exact), random_biquaternion(rng, cfg.exact)
        return _bq_same(quat_mirror(a * b), quat_mirror(b) * quat_mirror(a), cfg)

    return [_report("biquat.mirror_antihomomorphism", "(AB)^m = B^m A^m",
                    _worst(one_case() for _ in range(N_RANDOM)))]


def check_quat_mirror_matches_matrix(cfg):
    rng = cfg.rng(15)

    def one_case():
        q = random_biquaternion(rng, cfg.exact)
        m = qm.from_cnumbers(to_matrix(q), cfg.exact).mirror_conj()
        back = from_matrix([[m[r, c].w for c in range(2)] for r in range(2)])
        return _bq_same(quat_mirror(q), back, cfg)

    return [_report("biquat.mirror_matches_matrix", "a^m_(c-j+1),(r-i+1)",
                    _worst(one_case() for _ in range(N_RANDOM)),
                    "element mirror equals the 2x2 index-map mirror of its realization")]


def check_mirror_antiunitary_units(cfg):
    one, I, J, K = units(cfg.exact)
    res = _worst([
        _bq_same(J * quat_mirror(J), -one, cfg),
        _bq_same(K * quat_mirror(K), -one, cfg),
        _bq_same(I * quat_mirror(I), one, cfg),
    ])
    return [_report("biquat.mirror_antiunitary_units", "M M^m = -1", res,
                    "J J^m = K K^m = -1 (mirror anti-unitary); I I^m = +1, so I is not")]


def check_cnumber_mirror(cfg):
    rng = cfg.rng(16)

    def one_case():
        q = random_biquaternion(rng, cfg.exact)
        c = Biquaternion.from_scalar(q.w, cfg.exact)
        return _bq_same(quat_mirror(c), Biquaternion.from_scalar(q.w.conjugate(), cfg.exact), cfg)

    return [_report("biquat.cnumber_mirror", "For c-numbers m = *",
                    _worst(one_case() for _ in range(N_RANDOM)))]


# ---------------------------------------------------------------------------
# quaternionic matrix checks
# ---------------------------------------------------------------------------

def _qm_same(a, b, cfg):
    return _same(a, b, cfg, qm.max_deviation)


def check_qmat_mirror_additive(cfg):
    rng = cfg.rng(21)

    def one_case():
        r, c = rng.randint(1, 3), rng.randint(1, 3)
        a = qm.random_qmatrix(rng, r, c, cfg.exact)
        b = qm.random_qmatrix(rng, r, c, cfg.exact)
        return _qm_same((a + b).mirror_conj(), a.mirror_conj() + b.mirror_conj(), cfg)

    return [_report("qmatrix.mirror_additive", "(A+B)^m = A^m + B^m",
                    _worst(one_case() for _ in range(N_RANDOM)), f"{N_RANDOM} random pairs up to 3x3")]


def check_qmat_mirror_antihomomorphism(cfg):
    rng = cfg.rng(22)

    def one_case():
        r, k, c = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
        a = qm.random_qmatrix(rng, r, k, cfg.exact)
        b = qm.random_qmatrix(rng, k, c, cfg.exact)
        return _qm_same((a @ b).mirror_conj(), b.mirror_conj() @ a.mirror_conj(), cfg)

    return [_report("qmatrix.mirror_antihomomorphism", "(AB)^m = B^m A^m",
                    _worst(one_case() for _ in range(N_RANDOM)), f"{N_RANDOM} random pairs up to 3x3")]


def check_qmat_mirror_involution(cfg):
    rng = cfg.rng(23)

    def one_case():
        m = qm.random_qmatrix(rng, rng.randint(1, 4), rng.randint(1, 4), cfg.exact)
        mm = m.mirror_conj()
        shape_ok = mm.shape == (m.cols, m.rows)
        ok, err = _qm_same(mm.mirror_conj(), m, cfg)
        return ok and shape_ok, err

    return [_report("qmatrix.mirror_involution", INVENTED,
                    _worst(one_case() for _ in range(N_RANDOM)), "random r x c, r, c <= 4")]


def check_qmat_cnumber_antitranspose(cfg):
    rng = cfg.rng(24)

    def one_case():
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        vals = [[random_biquaternion(rng, cfg.exact).w for _ in range(c)] for _ in range(r)]
        m = qm.from_cnumbers(vals, cfg.exact)
        expect = qm.from_cnumbers(
            [[vals[r - 1 - j][c - 1 - i].conjugate() for j in range(r)] for i in range(c)], cfg.exact
        )
        return _qm_same(m.mirror_conj(), expect, cfg)

    return [_report("qmatrix.cnumber_antitranspose", "For c-numbers m = *",
                    _worst(one_case() for _ in range(N_RANDOM)),
                    "c-number matrices: anti-diagonal transpose with complex conjugation")]


def check_qmat_unit_realization(cfg):
    _, I, J, K = units(cfg.exact)
    res = _worst([
        _qm_same(qm.from_cnumbers(to_matrix(u), cfg.exact).mirror_conj(),
                 qm.from_cnumbers(to_matrix(quat_mirror(u)), cfg.exact), cfg)
        for u in (I, J, K)
    ])
    return [_report("qmatrix.unit_realization_mirror", "I^m=-I, J^m=J, K^m=K", res,
                    "2x2 index-map mirror of each realized unit")]


def check_qmat_bra_formation(cfg):
    si, sj = ms._ray_scales(cfg.exact)
    n = Biquaternion.from_scalar(1, cfg.exact)
    col = qm.QMatrix(((si,), (n,), (sj,)))
    expect = qm.QMatrix(((sj, n, -si),))
    return [_report("qmatrix.bra_formation", "|>^m = <|", _qm_same(col.mirror_conj(), expect, cfg),
                    "(I/s, n, J/s)^T -> (J/s, n*, -I/s)")]


def check_qmat_identity_fixed(cfg):
    res = _worst(_qm_same(qm.identity(n, cfg.exact).mirror_conj(), qm.identity(n, cfg.exact), cfg)
                 for n in range(1, 6))
    return [_report("qmatrix.identity_fixed", INVENTED, res)]


def check_qmat_dagger_laws(cfg):
    rng = cfg.rng(25)

    def one_case():
        r, k, c = rng.randint(1, 3), rng.randint(1, 3), rng.randint(1, 3)
        a = qm.random_qmatrix(rng, r, k, cfg.exact)
        b = qm.random_qmatrix(rng, k, c, cfg.exact)
        return _worst([
            _qm_same(a.dagger().dagger(), a, cfg),
            _qm_same((a @ b).dagger(), b.dagger() @ a.dagger(), cfg),
        ])

    return [_report("qmatrix.dagger_laws", INVENTED, _worst(one_case() for _ in range(N_RANDOM // 5)),
                    f"{N_RANDOM // 5} random pairs up to 3x3")]


def check_qmat_classify_units(cfg):
    _, I, J, K = units(cfg.exact)
    tol = cfg.eff_tol
    got = {name: qm.classify(qm.from_cnumbers(to_matrix(u), cfg.exact), tol)
           for name, u in (("I", I), ("J", J), ("K", K))}
    got["1"] = qm.classify(qm.identity(2, cfg.exact), tol)
    expect = {
        "I": {qm.UNITARY, qm.MIRROR_HERMITIAN},
        "J": {qm.UNITARY, qm.MIRROR_ANTIUNITARY, qm.MIRROR_ANTIHERMITIAN},
        "K": {qm.UNITARY, qm.MIRROR_ANTIUNITARY, qm.MIRROR_ANTIHERMITIAN},
        "1": {qm.UNITARY, qm.MIRROR_ANTIHERMITIAN},
    }
    ok = all(got[k] == expect[k] for k in expect)
    notes = "; ".join(f"{k}: {sorted(got[k])}" for k in ("1", "I", "J", "K"))
    return [judged("qmatrix.classify_units", "A^m=-A (res. A^m=+A)", 0.0 if ok else 1.0,
                   ok=ok, notes=notes)]


# ---------------------------------------------------------------------------
# Fock checks
# ---------------------------------------------------------------------------

def _fock_same(p, q, cfg, columns=None):
    if cfg.exact:
        ok = fock.equal_on(p, q, columns)
        return ok, 0.0 if ok else fock.deviation_on(p, q, columns)
    err = fock.deviation_on(p, q, columns)
    return err <= cfg.tol, err


def _diag_op(tower, values, exact):
    m = fock._zeros(tower.dim, exact)
    for k, v in enumerate(values):
        m[k, k] = scalar(v, exact)
    return fock.FockOperator(tower, m, frozenset(), exact)


def check_ladder_positive(cfg):
    a, a_dag = fock.ladder_pos(cfg.cutoff, cfg.exact)
    tower = a.tower
    results = []
    for n in range(cfg.cutoff + 1):
        lowered = a.apply(fock.basis_vector(tower, n, cfg.exact))
        expect = fock.basis_vector(tower, max(n - 1, 0), cfg.exact) * fock.sqrt(n, cfg.exact)
        if n == 0:
            expect = expect * scalar(0, cfg.exact)
        err = max(abs(complex(x) - complex(y)) for x, y in zip(lowered, expect))
        same = all(x == y for x, y in zip(lowered, expect)) if cfg.exact else err <= cfg.tol
        results.append((same, err))
    number = fock.number_op(a, a_dag)
    results.append(_fock_same(number, _diag_op(tower, range(cfg.cutoff + 1), cfg.exact), cfg))
    return [_report("fock.ladder_positive", "A |n> = sqrt(n) |n-1>", _worst(results),
                    "a|n> = sqrt(n)|n-1> and a^dag a = n for all n <= cutoff")]


def check_dagger_constraint(cfg):
    a, a_dag = fock.ladder_pos(cfg.cutoff, cfg.exact)
    cols = range(cfg.cutoff + 1)
    return [_report("fock.dagger_constraint", "a^m = a^dagger", _fock_same(a.dagger(), a_dag, cfg, cols))]


def check_canonical_commutator(cfg):
    a, a_dag = fock.ladder_pos(cfg.cutoff, cfg.exact)
    c = fock.commutator(a, a_dag)
    ident = fock.identity_op(a.tower, cfg.exact)
    interior = c.valid
    ok, err = _fock_same(c, ident, cfg, interior)
    notes = f"holds on {len(interior)}/{cfg.cutoff + 1} levels; boundary {sorted(c.invalid)} excluded"
    return [_report("fock.canonical_commutator", "[a,a^dagger]_- = 1", (ok, err), notes)]


def check_mirror_commutator(cfg):
    at, at_dag = fock.ladder_neg(cfg.cutoff, cfg.exact)
    c = fock.commutator(at, at_dag)
    minus_one = -fock.identity_op(at.tower, cfg.exact)
    interior = c.valid
    ok, err = _fock_same(c, minus_one, cfg, interior)
    notes = f"holds on {len(interior)}/{cfg.cutoff + 1} levels; deepest level excluded"
    return [_report("fock.mirror_commutator", "[a~,a~^dagger]_- = -1", (ok, err), notes)]


def check_mirror_number(cfg):
    at, at_dag = fock.ladder_neg(cfg.cutoff, cfg.exact)
    n_mirror = fock.number_op(at, at_dag)
    expect = _diag_op(at.tower, [-k for k in range(cfg.cutoff + 1)], cfg.exact)
    res = _fock_same(n_mirror, expect, cfg, range(cfg.cutoff + 1))
    levels = range(cfg.cutoff + 1)

    def spectrum_is_levels(op):
        vals = op.spectrum()
        if cfg.exact:
            return vals == [scalar(k, True) for k in levels]
        return len(vals) == len(levels) and all(abs(complex(v) - k) <= cfg.tol for v, k in zip(vals, levels))

    spec_ok = spectrum_is_levels(-n_mirror)
    pos_a, pos_dag = fock.ladder_pos(cfg.cutoff, cfg.exact)
    pos_ok = spectrum_is_levels(fock.number_op(pos_a, pos_dag))
    ok = res[0] and spec_ok and pos_ok
    return [_report("fock.mirror_number", "N~ = -a~^dagger a~", (ok, res[1]),
                    "a~dag a~ |-n> = -n|-n>; spectra of a^dag a and -a~dag a~ are {0..cutoff}")]


# ---------------------------------------------------------------------------
# mirror-space checks
# ---------------------------------------------------------------------------

def _ket_same(x, y, cfg):
    return _same(x, y, cfg, ms.ket_deviation)


def _block_same(p, q, cfg, columns=None):
    if cfg.exact:
        ok = ms.blocks_equal(p, q, columns)
        return ok, 0.0 if ok else ms.block_deviation(p, q, columns)
    err = ms.block_deviation(p, q, columns)
    return err <= cfg.tol, err


def check_real_norms(cfg):
    one = Biquaternion.from_scalar(1, cfg.exact)
    zero = one * scalar(0, cfg.exact)
    n = cfg.cutoff
    res = _worst(
        _bq_same(ms.inner(ms.real_ket(n, i, cfg.exact), ms.real_ket(n, j, cfg.exact)),
                 one if i == j else zero, cfg)
        for i in range(n + 1) for j in range(n + 1)
    )
    return [_report("mirror.real_norms", "<alpha_i|alpha_j> = delta_ij", res)]


def check_mirror_norms(cfg):
    one, _, _, K = units(cfg.exact)
    zero = one * scalar(0, cfg.exact)
    n = cfg.cutoff
    res = _worst(
        _bq_same(ms.inner(ms.mirror_ket(n, i, cfg.exact), ms.mirror_ket(n, j, cfg.exact)),
                 K if i == j else zero, cfg)
        for i in range(n + 1) for j in range(n + 1)
    )
    return [_report("mirror.mirror_norms", "<alpha~_i|alpha~_j> = K", res,
                    "every level <= cutoff; distinct levels orthogonal")]


def check_theta_real_to_mirror(cfg):
    th = ms.theta(cfg.cutoff, cfg.exact)
    res = _worst(
        _ket_same(th.apply(ms.real_ket(cfg.cutoff, n, cfg.exact)), ms.mirror_ket(cfg.cutoff, n, cfg.exact), cfg)
        for n in range(cfg.cutoff + 1)
    )
    return [_report("mirror.theta_real_to_mirror", "Theta|alpha> = |alpha~>", res)]


def check_theta_squared(cfg):
    one = Biquaternion.from_scalar(1, cfg.exact)
    factors = [ms.theta_squared_factor(cfg.cutoff, n, cfg.exact) for n in range(cfg.cutoff + 1)]
    proportional = all(f is not None for f in factors)
    err = max((deviation(f, one) for f in factors if f is not None), default=math.inf)
    values = sorted({repr(f) for f in factors})
    return [judged("mirror.theta_squared", INVENTED, 0.0 if proportional else math.inf,
                   ok=proportional,
                   notes=f"Theta^2|n>_R = c|n>_R with c in {values}; |c - 1| = {err:.3g}")]


def check_norm_exchange(cfg):
    th = ms.theta(cfg.cutoff, cfg.exact)
    thm = th.mirror_conj()
    results = []
    for n in range(cfg.cutoff + 1):
        a = ms.real_ket(cfg.cutoff, n, cfg.exact)
        b = ms.mirror_ket(cfg.cutoff, n, cfg.exact)
        results.append(_bq_same(ms.inner(a, thm.apply(th.apply(a))), ms.inner(b, b), cfg))
        results.append(_bq_same(ms.inner(b, thm.apply(th.apply(b))), ms.inner(a, a), cfg))
    return [_report("mirror.norm_exchange", "<alpha|Theta^m Theta|alpha>", _worst(results),
                    "both directions, every level <= cutoff")]


def check_block_A_mirror(cfg):
    n = cfg.cutoff
    display = ms.block_A_mirror(n, cfg.exact)
    lifted = ms.block_A(n, cfg.exact).mirror_conj()
    res_block = _block_same(lifted, display, cfg, range(n + 1))
    skeleton = ms.a_skeleton(cfg.exact).mirror_conj()
    one, _, _, _ = units(cfg.exact)
    i = one * scalar(1j, cfg.exact)
    z = one * scalar(0, cfg.exact)
    expect = qm.QMatrix(((z, z, -i), (z, one, z), (i, z, z)))
    res_sk = _qm_same(skeleton, expect, cfg)
    return [_report("mirror.block_A_mirror", "A^m = [[0,0,-ia^m],[0,a^m,0],[ia^m,0,0]]",
                    _worst([res_block, res_sk]), "lifted mirror of A equals the displayed A^m")]


def check_A_vacuum(cfg):
    a_op = ms.block_A(cfg.cutoff, cfg.exact)
    out = a_op.apply(ms.real_ket(cfg.cutoff, 0, cfg.exact))
    ok = out.is_zero()
    err = 0.0 if ok else ms.ket_deviation(out, 0 * out)
    return [judged("mirror.A_annihilates_vacuum", "A |n> = sqrt(n) |n-1>", err, ok=ok)]


def check_hamiltonian_blocks(cfg):
    cutoffs = sorted({3, 8, 12, cfg.cutoff})
    results, notes = [], []
    for n in cutoffs:
        h = ms.hamiltonian(n, cfg.exact)
        e = ms.expected_hamiltonian(n, cfg.exact)
        cols = [k for k in h.valid if k not in e.invalid]
        results.append(_block_same(h, e, cfg, cols))
        notes.append(f"N={n}: {len(cols)}/{n + 1} cols")
    return [_report("mirror.hamiltonian_blocks", "A^m A = H", _worst(results),
                    "diag(-a^dag a, a^dag a, -a^dag a); " + ", ".join(notes))]


def check_hamiltonian_real(cfg):
    h = ms.hamiltonian(cfg.cutoff, cfg.exact)
    res = _worst(
        _ket_same(h.apply(ms.real_ket(cfg.cutoff, n, cfg.exact)),
                  scalar(n, cfg.exact) * ms.real_ket(cfg.cutoff, n, cfg.exact), cfg)
        for n in range(cfg.cutoff + 1)
    )
    return [_report("mirror.hamiltonian_real_action", "A^m sqrt(n)|n-1> = n|n>", res)]


def check_component_energies(cfg):
    h = ms.hamiltonian(cfg.cutoff, cfg.exact)
    results = []
    for n in range(cfg.cutoff + 1):
        shares = ms.component_energies(ms.mirror_ket(cfg.cutoff, n, cfg.exact), h)
        target = Biquaternion.from_scalar(scalar(-n, cfg.exact) * scalar(0.5, cfg.exact), cfg.exact)
        results.append(_bq_same(shares["I"], target, cfg))
        results.append(_bq_same(shares["J"], target, cfg))
    return [_report("mirror.component_energies", "= -n/2 |I/sqrt2 (-n)>", _worst(results),
                    "each mirror branch carries -n/2 of <x|H|x>, in units of <x|x> = K")]


def check_vacuum_energy(cfg):
    h = ms.hamiltonian(cfg.cutoff, cfg.exact)
    vac = ms.combined_vacuum(cfg.cutoff, cfg.exact)
    zero = Biquaternion.from_scalar(0, cfg.exact)
    results = [_bq_same(ms.inner(vac, h.apply(vac)), zero, cfg)]
    results += [_bq_same(ms.level_energy_balance(cfg.cutoff, n, cfg.exact), zero, cfg)
                for n in range(cfg.cutoff + 1)]
    return [_report("mirror.vacuum_energy", "H = a^dagger a + 1/2", _worst(results),
                    "<vac|H|vac> = 0 (no 1/2 offset); per level, mirror shares -n/2 - n/2 cancel real +n")]


def check_h_theta(cfg):
    th = ms.corrupted_theta(cfg.cutoff, cfg.exact) if cfg.corrupt_theta else None
    r = ms.check_H_theta_anticommute(cfg.cutoff, cfg.exact, cfg.eff_tol, theta_op=th)
    if cfg.corrupt_theta:
        r = CheckReport(r.check_id, r.paper_anchor, r.status, r.max_abs_error,
                        r.convention_notes + "; corrupted Theta requested")
    return [r]


def check_h_theta_negative_control(cfg):
    fill = ms.check_H_theta_anticommute(cfg.cutoff, cfg.exact, cfg.eff_tol,
                                        theta_op=ms.corrupted_theta(cfg.cutoff, cfg.exact, "fill"))
    sign = ms.check_H_theta_anticommute(cfg.cutoff, cfg.exact, cfg.eff_tol,
                                        theta_op=ms.corrupted_theta(cfg.cutoff, cfg.exact, "sign"))
    ok = fill.status == "fail"
    notes = (f"filled (R,R) entry: {fill.status} (dev {fill.max_abs_error:.3g}); "
             f"sign flip on (J,R): {sign.status} (dev {sign.max_abs_error:.3g}), "
             "a sign flip is undetectable because populated entries pair opposite H-eigenvalues")
    return [judged("mirror.h_theta_negative_control", "H Theta = -Theta H", fill.max_abs_error,
                   ok=ok, notes=notes)]


def check_hole_number(cfg):
    n_til = ms.hole_number_operator(cfg.cutoff, cfg.exact)
    results = [_ket_same(n_til.apply(h.ket), h.ket.mirror_part(), cfg)
               for h in ms.hole_states(cfg.cutoff, cfg.exact)]
    return [_report("mirror.hole_number", "N~|phi+-,-1> = +1|phi+-,-1>", _worst(results),
                    "eigenvalue +1 on the mirror branches of phi+ and phi-")]


def check_hole_vev(cfg):
    one = Biquaternion.from_scalar(1, cfg.exact)
    res = _worst(_bq_same(ms.vev(h), one, cfg) for h in ms.hole_states(cfg.cutoff, cfg.exact))
    return [_report("mirror.hole_vev", "|0>_R", res, "<0_R|phi+-> = 1")]


def check_hole_self_inner(cfg):
    _, _, _, K = units(cfg.exact)
    vals = [ms.hole_self_inner(h) for h in ms.hole_states(cfg.cutoff, cfg.exact)]
    pure = all(not v.w for v in vals) if cfg.exact else all(abs(complex(v.w)) <= cfg.tol for v in vals)
    res = _worst([(pure, 0.0)] + [_bq_same(v, -K, cfg) for v in vals])
    return [_report("mirror.hole_self_inner", INVENTED, res,
                    "mirror part of <phi+-|phi+-> = -K (pure-imaginary quaternion)")]


def check_ghost_statistics(cfg):
    return [ms.ghost_statistics_check(h, cfg.exact) for h in ms.hole_states(cfg.cutoff, cfg.exact)]


def check_phase_identity(cfg):
    x = ms.mirror_ket(cfg.cutoff, 1, cfg.exact)
    tol = max(cfg.tol, 1e-15)
    res = _worst(
        (ms.ket_deviation(ms.apply_phase(x, 0.0, ax), x.to_float()) <= tol,
         ms.ket_deviation(ms.apply_phase(x, 0.0, ax), x.to_float()))
        for ax in ("I", "J", "K")
    )
    return [_report("mirror.phase_identity", "e^{theta.K}", res, "theta = 0 is the identity (float)")]


def check_phase_K_display(cfg):
    x = ms.mirror_ket(cfg.cutoff, 2, False)
    y = ms.apply_phase(x, math.pi / 2, "K")
    expect_i = x.comp_I[2] * 1j
    expect_j = x.comp_J[2] * (-1j)
    err = max(deviation(y.comp_I[2], expect_i), deviation(y.comp_J[2], expect_j))
    return [judged("mirror.phase_K_display", "e^{theta.K}|alpha~>", err, max(cfg.tol, 1e-15),
                   notes="theta = pi/2: I-ray x e^{i theta}, J-ray x e^{-i theta} (float)")]


def check_phase_norm_I(cfg):
    x = ms.mirror_ket(cfg.cutoff, 1, cfg.exact)
    base = ms.inner(x, x).to_float()
    thetas = [k * math.pi / 16 for k in range(-16, 17)]
    err = max(deviation(ms.phase_norm(x, t, "I"), base) for t in thetas)
    return [judged("mirror.phase_norm_I", "e^{sigma I}", err, max(cfg.tol, 1e-12),
                   notes="norm K constant along the I-phase orbit (degenerate mirror vacuum family)")]


def check_phase_norm_KJ(cfg):
    x = ms.mirror_ket(cfg.cutoff, 1, cfg.exact)
    one, _, _, K = units(False)
    thetas = [k * math.pi / 16 for k in range(-16, 17)]
    k_err = max(deviation(ms.phase_norm(x, t, "K"), K * math.cos(2 * t)) for t in thetas)
    j_err = max(deviation(ms.phase_norm(x, t, "J"), K * math.cos(2 * t) - one * math.sin(2 * t))
                for t in thetas)
    base = ms.inner(x, x).to_float()
    drift = max(deviation(ms.phase_norm(x, t, ax), base) for t in thetas for ax in ("K", "J"))
    return [CheckReport("mirror.phase_norm_KJ", "e^{theta.K}", FLAGGED, drift,
                        f"K-phase norm = cos(2 theta) K (fit dev {k_err:.2e}); "
                        f"J-phase norm = cos(2 theta) K - sin(2 theta) (fit dev {j_err:.2e}); "
                        "not invariant, so only the I-orbit is norm-degenerate")]


def check_completeness(cfg):
    _, _, _, K = units(False)
    c0 = ms.completeness_factor(cfg.cutoff, "K", 0.0)
    c1 = ms.completeness_factor(cfg.cutoff, "K", math.pi / 8)
    return [CheckReport("mirror.completeness_phase", "int|alpha~><alpha~| = e^{i theta} K", FLAGGED,
                        deviation(c0, K),
                        f"default basis: factor {_short(c0)} (theta = 0); "
                        f"K-rotated by pi/8: factor {_short(c1)}; phase depends on basis choice")]


def _short(q: Biquaternion) -> str:
    parts = []
    for name, c in zip(("", "I", "J", "K"), q.coeffs):
        c = complex(c)
        if abs(c) > 1e-12:
            v = c.real if abs(c.imag) < 1e-12 else c
            parts.append(f"{v:.6g}{name}")
    return " + ".join(parts) or "0"


# ---------------------------------------------------------------------------
# field statistics checks
# ---------------------------------------------------------------------------

def _sample_times(cfg: SuiteConfig, n: int = 50) -> list[float]:
    rng = cfg.rng(51)
    return [rng.uniform(0.01, 10.0) for _ in range(n)]


def check_delta_zero(cfg):
    d = fieldstat.delta_minus(0.0, fieldstat.RegulatorConfig(eta=cfg.eta))
    return [judged("field.delta_minus_zero", "epsilon(p_0)", abs(d), 0.0)]


def check_delta_antisymmetry(cfg):
    rc = fieldstat.RegulatorConfig(eta=cfg.eta)
    err = max(abs(fieldstat.delta_minus(t, rc) + fieldstat.delta_minus(-t, rc)) for t in _sample_times(cfg))
    return [judged("field.delta_minus_antisymmetry", "epsilon(p_0)", err, 1e-10,
                   notes=f"50 sampled t in [0.01, 10], eta={cfg.eta:g}")]


def check_delta_closed_form(cfg):
    times = _sample_times(cfg, 20) + [1.0]
    worst = 0.0
    for eta in (1e-1, 1e-2, 1e-3):
        rc = fieldstat.RegulatorConfig(eta=eta)
        for t in times:
            exact = fieldstat.closed_form(t, eta)
            worst = max(worst, abs(fieldstat.delta_minus(t, rc) - exact) / abs(exact))
    return [judged("field.delta_minus_closed_form", "Delta_-(t) = 1/2pi int dp_0", worst, 1e-4,
                   notes="relative error vs -i t/(pi (t^2 + eta^2)), eta in {1e-1, 1e-2, 1e-3}")]


def check_bracket_table(cfg):
    expect = {
        ("subluminal", "commutator"): (1, -1),
        ("subluminal", "anticommutator"): (1, 1),
        ("supraluminal", "commutator"): (1, 1),
        ("supraluminal", "anticommutator"): (1, -1),
    }
    rng = cfg.rng(52)
    worst = 0.0
    for _ in range(200):
        c = fieldstat.FieldCoefficients(complex(rng.randint(-5, 5), rng.randint(-5, 5)) or 1,
                                        complex(rng.randint(-5, 5), rng.randint(-5, 5)))
        k2 = fieldstat._modsq(c.kappa)
        l2 = fieldstat._modsq(c.lam)
        for (space, bracket), (sk, sl) in expect.items():
            got = fieldstat.bracket_coefficient(c, bracket, space)
            worst = max(worst, abs(got - (sk * k2 + sl * l2)))
    return [judged("field.bracket_table", "(|kappa|^2 -+ |lambda|^2)", worst, 0.0,
                   notes="subluminal: comm -, anti +; supraluminal: comm +, anti -")]


def check_select_statistics(cfg):
    got = {s: fieldstat.select_statistics(s) for s in fieldstat.SPACES}
    unique = all(len(fieldstat.vanishing_brackets(s)) == 1 for s in fieldstat.SPACES)
    ok = unique and got == {
        "subluminal": fieldstat.Statistics.BOSE_EINSTEIN,
        "supraluminal": fieldstat.Statistics.FERMI_DIRAC,
    }
    notes = ", ".join(f"{s} -> {v.value}" for s, v in got.items())
    return [judged("field.select_statistics", "[phi(t),phi^dagger(t')]_-+", 0.0 if ok else 1.0,
                   ok=ok, notes=notes)]


REGISTRY: tuple[Callable[[SuiteConfig], list[CheckReport]], ...] = (
    check_units_square,
    check_unit_commutators,
    check_ijk_sign,
    check_realization_roundtrip,
    check_product_homomorphism,
    check_mirror_units,
    check_quat_mirror_involution,
    check_quat_mirror_antihomomorphism,
    check_quat_mirror_matches_matrix,
    check_mirror_antiunitary_units,
    check_cnumber_mirror,
    check_qmat_mirror_additive,
    check_qmat_mirror_antihomomorphism,
    check_qmat_mirror_involution,
    check_qmat_cnumber_antitranspose,
    check_qmat_unit_realization,
    check_qmat_bra_formation,
    check_qmat_identity_fixed,
    check_qmat_dagger_laws,
    check_qmat_classify_units,
    check_ladder_positive,
    check_dagger_constraint,
    check_canonical_commutator,
    check_mirror_commutator,
    check_mirror_number,
    check_real_norms,
    check_mirror_norms,
    check_theta_real_to_mirror,
    check_theta_squared,
    check_norm_exchange,
    check_block_A_mirror,
    check_A_vacuum,
    check_hamiltonian_blocks,
    check_hamiltonian_real,
    check_component_energies,
    check_vacuum_energy,
    check_h_theta,
    check_h_theta_negative_control,
    check_hole_number,
    check_hole_vev,
    check_hole_self_inner,
    check_ghost_statistics,
    check_phase_identity,
    check_phase_K_display,
    check_phase_norm_I,
    check_phase_norm_KJ,
    check_completeness,
    check_delta_zero,
    check_delta_antisymmetry,
    check_delta_closed_form,
    check_bracket_table,
    check_select_statistics,
)


def run_suite(cfg: SuiteConfig) -> list[CheckReport]:
    reports = [r for check in REGISTRY for r in check(cfg)]
    return sorted(reports, key=lambda r: r.check_id)


def suite_failed(reports: Iterable[CheckReport]) -> bool:
    """True iff any non-flagged check failed."""
    return any(r.status not in (PASS, FLAGGED) for r in reports)
