"""The three-branch construction: real kets alongside paired mirror rays.

A :class:`BlockKet` has three branches ordered ``(I, R, J)``; each branch is a
vector over the Fock levels with biquaternion entries.  A :class:`BlockOperator`
is a 3x3 grid of Fock-level :class:`~mirrorqm.qmatrix.QMatrix` blocks.

Mirror conjugation of a block object reflects the 3x3 grid across its
anti-diagonal and maps each Fock factor to its dagger (the constraint
``a^m = a^dagger``); it does *not* reverse the Fock index.  Biquaternion scales
always multiply from the left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from . import fock
from .biquat import Biquaternion, deviation, expm_unit, from_matrix, to_matrix, units, zero
from .exact import scalar, sqrt
from .fock import FockOperator
from .qmatrix import QMatrix, mirror_conj, qmat_mul
from .report import FLAGGED, CheckReport, judged

BRANCHES = ("I", "R", "J")
_I, _R, _J = 0, 1, 2


class CutoffMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# kets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockKet:
    cutoff: int
    comps: tuple[tuple[Biquaternion, ...], tuple[Biquaternion, ...], tuple[Biquaternion, ...]]

    @property
    def exact(self) -> bool:
        return self.comps[0][0].exact

    @property
    def comp_I(self):
        return self.comps[_I]

    @property
    def comp_R(self):
        return self.comps[_R]

    @property
    def comp_J(self):
        return self.comps[_J]

    def _check(self, other: "BlockKet") -> None:
        if self.cutoff != other.cutoff:
            raise CutoffMismatch(f"cutoff {self.cutoff} vs {other.cutoff}")

    def __add__(self, other: "BlockKet") -> "BlockKet":
        self._check(other)
        return BlockKet(self.cutoff, tuple(
            tuple(a + b for a, b in zip(ca, cb)) for ca, cb in zip(self.comps, other.comps)
        ))

    def __sub__(self, other: "BlockKet") -> "BlockKet":
        return self + (-other)

    def __neg__(self) -> "BlockKet":
        return BlockKet(self.cutoff, tuple(tuple(-a for a in c) for c in self.comps))

    def __rmul__(self, c) -> "BlockKet":
        return BlockKet(self.cutoff, tuple(tuple(c * a for a in comp) for comp in self.comps))

    def right_mul(self, q: Biquaternion) -> "BlockKet":
        return BlockKet(self.cutoff, tuple(tuple(a * q for a in comp) for comp in self.comps))

    def mirror_part(self) -> "BlockKet":
        z = zero(self.exact)
        return BlockKet(self.cutoff, (self.comp_I, tuple(z for _ in self.comp_R), self.comp_J))

    def real_part(self) -> "BlockKet":
        z = zero(self.exact)
        blank = tuple(z for _ in self.comp_R)
        return BlockKet(self.cutoff, (blank, self.comp_R, blank))

    def is_zero(self) -> bool:
        return all(a.is_zero() for c in self.comps for a in c)

    def to_float(self) -> "BlockKet":
        return BlockKet(self.cutoff, tuple(tuple(a.to_float() for a in c) for c in self.comps))


def ket_deviation(x: BlockKet, y: BlockKet) -> float:
    x._check(y)
    return max(deviation(a, b) for ca, cb in zip(x.comps, y.comps) for a, b in zip(ca, cb))


def kets_equal(x: BlockKet, y: BlockKet, tol: float = 0.0) -> bool:
    if tol == 0.0 and x.exact and y.exact:
        return x == y
    return ket_deviation(x, y) <= tol


def _ket_from(cutoff: int, exact: bool, entries: dict[tuple[int, int], Biquaternion]) -> BlockKet:
    z = zero(exact)
    comps = [[z] * (cutoff + 1) for _ in range(3)]
    for (branch, level), q in entries.items():
        comps[branch][level] = q
    return BlockKet(cutoff, tuple(tuple(c) for c in comps))


def _ray_scales(exact: bool) -> tuple[Biquaternion, Biquaternion]:
    """``(I/sqrt2, J/sqrt2)``."""
    _, I, J, _ = units(exact)
    r = sqrt(Fraction(1, 2), exact)
    return I * r, J * r


def real_ket(cutoff: int, n: int, exact: bool = True) -> BlockKet:
    """Conventional basis ket ``|n>`` on the real branch."""
    one = Biquaternion.from_scalar(1, exact)
    return _ket_from(cutoff, exact, {(_R, n): one})


def mirror_ket(cutoff: int, n: int, exact: bool = True) -> BlockKet:
    """Mirror basis ket: the ray pair ``I/sqrt2`` and ``J/sqrt2`` at level ``n``."""
    si, sj = _ray_scales(exact)
    return _ket_from(cutoff, exact, {(_I, n): si, (_J, n): sj})


def combined_vacuum(cutoff: int, exact: bool = True) -> BlockKet:
    return real_ket(cutoff, 0, exact) + mirror_ket(cutoff, 0, exact)


def bra_row(x: BlockKet, level: int) -> QMatrix:
    """Bra of one Fock level: the mirror conjugate of the 3x1 branch column."""
    col = QMatrix(tuple((x.comps[b][level],) for b in range(3)))
    return mirror_conj(col)


def inner(x: BlockKet, y: BlockKet) -> Biquaternion:
    """``<x|y>``: per level, mirror_conj(column of x) times column of y, summed."""
    x._check(y)
    total = zero(x.exact and y.exact)
    for n in range(x.cutoff + 1):
        col_y = QMatrix(tuple((y.comps[b][n],) for b in range(3)))
        total = total + qmat_mul(bra_row(x, n), col_y)[0, 0]
    return total


# ---------------------------------------------------------------------------
# operators
# ---------------------------------------------------------------------------

def _zero_block(dim: int, exact: bool) -> QMatrix:
    z = zero(exact)
    return QMatrix(tuple(tuple(z for _ in range(dim)) for _ in range(dim)))


@dataclass(frozen=True)
class BlockOperator:
    cutoff: int
    blocks: tuple[tuple[QMatrix, QMatrix, QMatrix], ...]
    invalid: frozenset[int] = field(default_factory=frozenset)

    @property
    def exact(self) -> bool:
        return self.blocks[0][0].exact

    @property
    def dim(self) -> int:
        return self.cutoff + 1

    @property
    def valid(self) -> list[int]:
        return [k for k in range(self.dim) if k not in self.invalid]

    @classmethod
    def from_terms(cls, cutoff: int, exact: bool,
                   terms: dict[tuple[int, int], Sequence[tuple[Biquaternion, FockOperator]]]
                   ) -> "BlockOperator":
        """Assemble from ``(row, col) -> [(coefficient, fock_factor), ...]``."""
        dim = cutoff + 1
        blocks = [[_zero_block(dim, exact) for _ in range(3)] for _ in range(3)]
        invalid: set[int] = set()
        z = zero(exact)
        for (r, c), items in terms.items():
            acc = [[z] * dim for _ in range(dim)]
            for coeff, op in items:
                if op.tower.dim != dim:
                    raise CutoffMismatch("Fock factor has the wrong cutoff")
                invalid |= op.invalid
                m = op.matrix
                for i in range(dim):
                    for j in range(dim):
                        v = m[i, j]
                        if v != 0:
                            acc[i][j] = acc[i][j] + coeff * scalar(v, exact)
            blocks[r][c] = QMatrix(tuple(tuple(row) for row in acc))
        return cls(cutoff, tuple(tuple(row) for row in blocks), frozenset(invalid))

    def __matmul__(self, other: "BlockOperator") -> "BlockOperator":
        if self.cutoff != other.cutoff:
            raise CutoffMismatch(f"cutoff {self.cutoff} vs {other.cutoff}")
        out = []
        for r in range(3):
            row = []
            for c in range(3):
                acc = None
                for k in range(3):
                    a, b = self.blocks[r][k], other.blocks[k][c]
                    if a.is_zero() or b.is_zero():
                        continue
                    term = qmat_mul(a, b)
                    acc = term if acc is None else acc + term
                row.append(acc if acc is not None else _zero_block(self.dim, self.exact))
            out.append(tuple(row))
        # column j of the product is suspect if other maps it onto a suspect level of self
        reach_bad = {
            j for j in range(self.dim)
            if any(not other.blocks[k][c][i, j].is_zero()
                   for k in range(3) for c in range(3) for i in self.invalid)
        }
        return BlockOperator(self.cutoff, tuple(out), frozenset(other.invalid | reach_bad))

    def __add__(self, other: "BlockOperator") -> "BlockOperator":
        return BlockOperator(self.cutoff, tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.blocks, other.blocks)
        ), self.invalid | other.invalid)

    def __sub__(self, other: "BlockOperator") -> "BlockOperator":
        return self + (-other)

    def __neg__(self) -> "BlockOperator":
        return BlockOperator(self.cutoff, tuple(tuple(-b for b in row) for row in self.blocks),
                             self.invalid)

    def mirror_conj(self) -> "BlockOperator":
        """Anti-diagonal reflection of the 3x3 grid; each Fock block goes to its
        transpose with entry-wise biquaternion mirror (``a^m = a^dagger``)."""
        def fock_mirror(b: QMatrix) -> QMatrix:
            n = b.rows
            return QMatrix(tuple(tuple(b[i, j].mirror() for i in range(n)) for j in range(n)))

        out = [[None] * 3 for _ in range(3)]
        for r in range(3):
            for c in range(3):
                out[2 - c][2 - r] = fock_mirror(self.blocks[r][c])
        return BlockOperator(self.cutoff, tuple(tuple(row) for row in out), self.invalid)

    def apply(self, x: BlockKet) -> BlockKet:
        if x.cutoff != self.cutoff:
            raise CutoffMismatch(f"cutoff {self.cutoff} vs {x.cutoff}")
        z = zero(self.exact and x.exact)
        comps = []
        for r in range(3):
            out = [z] * self.dim
            for c in range(3):
                blk = self.blocks[r][c]
                for i in range(self.dim):
                    for j in range(self.dim):
                        e = blk[i, j]
                        if e.is_zero() or x.comps[c][j].is_zero():
                            continue
                        out[i] = out[i] + e * x.comps[c][j]
            comps.append(tuple(out))
        return BlockKet(self.cutoff, tuple(comps))


def block_deviation(p: BlockOperator, q: BlockOperator, columns: Sequence[int] | None = None) -> float:
    """Max entry deviation over the given Fock columns (default: valid for both)."""
    if columns is None:
        columns = [k for k in p.valid if k not in q.invalid]
    worst = 0.0
    for r in range(3):
        for c in range(3):
            a, b = p.blocks[r][c], q.blocks[r][c]
            for i in range(p.dim):
                for j in columns:
                    worst = max(worst, deviation(a[i, j], b[i, j]))
    return worst


def blocks_equal(p: BlockOperator, q: BlockOperator, columns: Sequence[int] | None = None,
                 tol: float = 0.0) -> bool:
    if columns is None:
        columns = [k for k in p.valid if k not in q.invalid]
    if tol == 0.0 and p.exact and q.exact:
        return all(
            p.blocks[r][c][i, j] == q.blocks[r][c][i, j]
            for r in range(3) for c in range(3) for i in range(p.dim) for j in columns
        )
    return block_deviation(p, q, columns) <= tol


def lift(skeleton: QMatrix, cutoff: int) -> BlockOperator:
    """Promote a 3x3 coefficient matrix to a block operator acting as the
    identity on the Fock index."""
    exact = skeleton.exact
    ident = fock.identity_op(fock.FockTower("positive", cutoff), exact)
    terms = {
        (r, c): [(skeleton[r, c], ident)]
        for r in range(3) for c in range(3) if not skeleton[r, c].is_zero()
    }
    return BlockOperator.from_terms(cutoff, exact, terms)


def theta_skeleton(exact: bool = True) -> QMatrix:
    """The 3x3 time-reversal coefficients
    ``[[0, I/s, 0], [-I/s, 0, -J/s], [0, J/s, 0]]`` with ``s = sqrt 2``."""
    si, sj = _ray_scales(exact)
    z = zero(exact)
    return QMatrix((
        (z, si, z),
        (-si, z, -sj),
        (z, sj, z),
    ))


def theta(cutoff: int, exact: bool = True) -> BlockOperator:
    if cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    return lift(theta_skeleton(exact), cutoff)


def corrupted_theta(cutoff: int, exact: bool = True, kind: str = "fill") -> BlockOperator:
    """Negative controls for the H/Theta anticommutator.

    ``"sign"`` flips the sign of the (J, R) entry.  Every populated entry of
    Theta couples branches whose H-eigenvalues are opposite, so this flip is
    *invisible* to ``H Theta + Theta H``.  ``"fill"`` populates the empty (R, R)
    entry with ``I/sqrt2``, which the anticommutator does detect.
    """
    sk = [list(row) for row in theta_skeleton(exact).entries]
    si, _ = _ray_scales(exact)
    if kind == "sign":
        sk[_J][_R] = -sk[_J][_R]
    elif kind == "fill":
        sk[_R][_R] = si
    else:
        raise ValueError(f"unknown corruption {kind!r}")
    return lift(QMatrix(tuple(tuple(r) for r in sk)), cutoff)


def a_skeleton(exact: bool = True) -> QMatrix:
    """Coefficient pattern of the block ladder ``A``: ``[[0,0,i],[0,1,0],[-i,0,0]]``."""
    one, _, _, _ = units(exact)
    i = one * scalar(1j, exact)
    z = zero(exact)
    return QMatrix(((z, z, i), (z, one, z), (-i, z, z)))


def block_A(cutoff: int, exact: bool = True) -> BlockOperator:
    a, _ = fock.ladder_pos(cutoff, exact)
    sk = a_skeleton(exact)
    return BlockOperator.from_terms(cutoff, exact, {
        (r, c): [(sk[r, c], a)] for r in range(3) for c in range(3) if not sk[r, c].is_zero()
    })


def block_A_mirror(cutoff: int, exact: bool = True, a_mirror: FockOperator | None = None) -> BlockOperator:
    """``[[0,0,-i a^m],[0,a^m,0],[i a^m,0,0]]``.

    ``a_mirror`` defaults to ``dagger(a)``; passing another operator drops the
    ``a^m = a^dagger`` constraint.
    """
    a, a_dag = fock.ladder_pos(cutoff, exact)
    am = a_dag if a_mirror is None else a_mirror
    sk = mirror_conj(a_skeleton(exact))
    return BlockOperator.from_terms(cutoff, exact, {
        (r, c): [(sk[r, c], am)] for r in range(3) for c in range(3) if not sk[r, c].is_zero()
    })


def hamiltonian(cutoff: int, exact: bool = True) -> BlockOperator:
    return block_A_mirror(cutoff, exact) @ block_A(cutoff, exact)


def expected_hamiltonian(cutoff: int, exact: bool = True) -> BlockOperator:
    """``diag(-a^dag a, a^dag a, -a^dag a)`` assembled directly."""
    one = Biquaternion.from_scalar(1, exact)
    a, a_dag = fock.ladder_pos(cutoff, exact)
    n = fock.number_op(a, a_dag)
    return BlockOperator.from_terms(cutoff, exact, {
        (_I, _I): [(-one, n)], (_R, _R): [(one, n)], (_J, _J): [(-one, n)],
    })


def hole_number_operator(cutoff: int, exact: bool = True,
                         ladder: tuple[FockOperator, FockOperator] | None = None) -> BlockOperator:
    """``N~ = -a~dag a~`` on both mirror branches; zero on the real branch."""
    ann, cre = ladder if ladder is not None else fock.ladder_neg(cutoff, exact)
    n_til = -fock.number_op(ann, cre)
    one = Biquaternion.from_scalar(1, exact)
    return BlockOperator.from_terms(cutoff, exact, {(_I, _I): [(one, n_til)], (_J, _J): [(one, n_til)]})


def mirror_ladder_block(op: FockOperator, exact: bool = True) -> BlockOperator:
    """Lift a mirror-tower operator onto both mirror branches."""
    one = Biquaternion.from_scalar(1, exact)
    return BlockOperator.from_terms(op.tower.cutoff, exact, {(_I, _I): [(one, op)], (_J, _J): [(one, op)]})


# ---------------------------------------------------------------------------
# derived quantities
# ---------------------------------------------------------------------------

def theta_squared_factor(cutoff: int, n: int, exact: bool = True) -> Biquaternion | None:
    """Scalar ``c`` with ``Theta Theta |n>_R = c |n>_R``, or ``None`` if the
    result is not proportional to the real ket."""
    th = theta(cutoff, exact)
    ket = real_ket(cutoff, n, exact)
    out = th.apply(th.apply(ket))
    c = out.comp_R[n]
    if not kets_equal(out, c * ket, 0.0 if exact else 1e-12):
        return None
    return c


def _inverse_unit(q: Biquaternion) -> Biquaternion:
    # q is +-1 or a unit squaring to -1; only these norms occur here
    qq = q * q
    one = Biquaternion.from_scalar(1, q.exact)
    tol = 0.0 if q.exact else 1e-12
    if deviation(qq, one) <= tol:
        return q
    if deviation(qq, -one) <= tol:
        return -q
    raise ValueError(f"{q!r} is not a unit norm")


def component_energies(x: BlockKet, h: BlockOperator) -> dict[str, Biquaternion]:
    """Each branch's share of ``<x|H|x>``, divided (on the right) by ``<x|x>``.

    For a mirror basis ket at level n the two mirror branches give ``-n/2``
    each; for a real ket the real branch gives ``n``.
    """
    hx = h.apply(x)
    norm_inv = _inverse_unit(inner(x, x))
    out = {}
    for b, name in enumerate(BRANCHES):
        # the bra entry pairing with branch b sits at position b of the bra row
        share = zero(x.exact)
        for n in range(x.cutoff + 1):
            share = share + bra_row(x, n)[0, b] * hx.comps[b][n]
        out[name] = share * norm_inv
    return out


def level_energy_balance(cutoff: int, n: int, exact: bool = True) -> Biquaternion:
    """Sum of per-branch energies for the real ket and the mirror ket at one
    occupation level; the two mirror shares cancel the real one."""
    h = hamiltonian(cutoff, exact)
    real = component_energies(real_ket(cutoff, n, exact), h)
    mir = component_energies(mirror_ket(cutoff, n, exact), h)
    return real["R"] + mir["I"] + mir["J"]


@dataclass(frozen=True)
class HoleState:
    sign: str
    ket: BlockKet


def hole_states(cutoff: int, exact: bool = True) -> tuple[HoleState, HoleState]:
    """The doublet at mirror level -1 with a real-vacuum component:
    ``phi+ = (+iI/s, |0>_R, -iJ/s)`` and ``phi- = (-iI/s, |0>_R, +iJ/s)``."""
    if cutoff < 2:
        raise ValueError("hole states need cutoff >= 2")
    si, sj = _ray_scales(exact)
    i = scalar(1j, exact)
    one = Biquaternion.from_scalar(1, exact)
    states = []
    for sign, s in (("+", 1), ("-", -1)):
        ket = _ket_from(cutoff, exact, {
            (_I, 1): si * (i * s),
            (_R, 0): one,
            (_J, 1): sj * (-i * s),
        })
        states.append(HoleState(sign, ket))
    return states[0], states[1]


_PHASE_UNITS = {"I": 1, "J": 2, "K": 3}


def apply_phase(x: BlockKet, theta_: float, axis: str) -> BlockKet:
    """Rotate the mirror doublet ``(comp_I, comp_J)`` by ``exp(theta * U)``.

    ``U`` is ``I``, ``J`` or ``K`` taken in its 2x2 realization acting on the
    doublet; ``K`` is diagonal, so it multiplies comp_I by ``e^{i theta}`` and
    comp_J by ``e^{-i theta}``.  ``I`` and ``J`` mix the two rays.  The real
    branch is untouched.  Result is in float mode.
    """
    if axis not in _PHASE_UNITS:
        raise ValueError(f"axis must be one of I, J, K, got {axis!r}")
    unit = units(False)[_PHASE_UNITS[axis]]
    u = to_matrix(expm_unit(theta_, unit)).astype(complex)
    xf = x.to_float()
    new_i, new_j = [], []
    for a, b in zip(xf.comp_I, xf.comp_J):
        new_i.append(a * complex(u[0, 0]) + b * complex(u[0, 1]))
        new_j.append(a * complex(u[1, 0]) + b * complex(u[1, 1]))
    return BlockKet(x.cutoff, (tuple(new_i), xf.comp_R, tuple(new_j)))


def projector(x: BlockKet) -> Callable[[BlockKet], BlockKet]:
    """``|x><x|`` as a map: ``y -> x <x|y>`` (the scalar multiplies on the right)."""
    def apply(y: BlockKet) -> BlockKet:
        return x.right_mul(inner(x, y))
    return apply


def completeness_factor(cutoff: int, axis: str = "K", theta_: float = 0.0) -> Biquaternion:
    """Factor ``c`` with ``sum_n |m_n><m_n| applied to |m_k> = |m_k> c`` for the
    (phase-rotated) mirror basis; identical for every k."""
    basis = [apply_phase(mirror_ket(cutoff, n, False), theta_, axis) for n in range(cutoff + 1)]
    probe = basis[0]
    result = None
    for b in basis:
        term = projector(b)(probe)
        result = term if result is None else result + term
    # read c off a nonzero component of the probe: probe_I * c = result_I
    return _left_divide(probe.comp_I[0], result.comp_I[0])


def _left_divide(a: Biquaternion, b: Biquaternion) -> Biquaternion:
    """Solve ``a c = b`` via the 2x2 realization (float)."""
    ma = to_matrix(a.to_float()).astype(complex)
    mb = to_matrix(b.to_float()).astype(complex)
    return from_matrix(np.linalg.solve(ma, mb))


# ---------------------------------------------------------------------------
# checks exposed by this module
# ---------------------------------------------------------------------------

def check_H_theta_anticommute(cutoff: int, exact: bool = True, tol: float = 0.0,
                              theta_op: BlockOperator | None = None,
                              check_id: str = "mirror.h_theta_anticommute") -> CheckReport:
    h = hamiltonian(cutoff, exact)
    th = theta(cutoff, exact) if theta_op is None else theta_op
    anti = h @ th + th @ h
    zero_op = lift(QMatrix(tuple(tuple(zero(exact) for _ in range(3)) for _ in range(3))), cutoff)
    err = block_deviation(anti, zero_op, anti.valid)
    ok = blocks_equal(anti, zero_op, anti.valid) if exact and tol == 0.0 else err <= tol
    return judged(check_id, "H Theta = -Theta H", err, tol, ok=ok,
                  notes=f"cutoff={cutoff}; valid columns {len(anti.valid)}/{cutoff + 1}")


GHOST_CONVENTIONS = ("lowering", "raising_toward_vacuum", "exclusion")


def ghost_statistics_outcomes(hole: HoleState, exact: bool = True) -> dict[str, tuple[float, float]]:
    """For each ladder convention, ``(|N~ a~dag phi|, |N~ a~ phi|)`` on the mirror branches.

    lowering: the concrete mirror ladder (``a~`` moves toward the mirror vacuum).
    raising_toward_vacuum: roles swapped, ``a~dag`` moves toward the vacuum.
    exclusion: mirror tower cut to the two levels {0~, -1}, i.e. at most one hole.
    """
    cutoff = hole.ket.cutoff
    out = {}
    for conv in GHOST_CONVENTIONS:
        if conv == "exclusion":
            ket = _truncate(hole.ket, 1)
            ann, cre = fock.ladder_neg(1, exact)
        else:
            ket = hole.ket
            ann, cre = fock.ladder_neg(cutoff, exact)
            if conv == "raising_toward_vacuum":
                ann, cre = cre, ann
        n_til = hole_number_operator(ket.cutoff, exact, ladder=fock.ladder_neg(ket.cutoff, exact))
        up = n_til.apply(mirror_ladder_block(cre, exact).apply(ket.mirror_part()))
        down = n_til.apply(mirror_ladder_block(ann, exact).apply(ket.mirror_part()))
        out[conv] = (_ket_size(up), _ket_size(down))
    return out


def _ket_size(x: BlockKet) -> float:
    return max(abs(c) for comp in x.comps for a in comp for c in a.coeffs)


def _truncate(x: BlockKet, cutoff: int) -> BlockKet:
    return BlockKet(cutoff, tuple(tuple(c[: cutoff + 1]) for c in x.comps))


def ghost_statistics_check(hole: HoleState, exact: bool = True) -> CheckReport:
    """Always ``flagged``: records which conventions make both
    ``N~ a~dag phi`` and ``N~ a~ phi`` vanish."""
    if hole.ket.cutoff < 3:
        raise ValueError("ghost statistics check needs cutoff >= 3")
    outcomes = ghost_statistics_outcomes(hole, exact)
    parts = []
    for conv, (up, down) in outcomes.items():
        both = up == 0.0 and down == 0.0
        parts.append(f"{conv}: |N~a~dag phi|={up:.6g}, |N~a~ phi|={down:.6g}, both_zero={both}")
    concrete_up, concrete_down = outcomes["lowering"]
    return CheckReport(
        f"mirror.ghost_statistics_phi{hole.sign}",
        "N~ a~dag |phi,-1> = 0",
        FLAGGED,
        max(concrete_up, concrete_down),
        "; ".join(parts),
    )


def hole_self_inner(hole: HoleState) -> Biquaternion:
    """Mirror-sector part of ``<phi|phi>``."""
    m = hole.ket.mirror_part()
    return inner(m, m)


def vev(hole: HoleState) -> Biquaternion:
    """Overlap ``<0_R | phi>``."""
    return inner(real_ket(hole.ket.cutoff, 0, hole.ket.exact), hole.ket)


def phase_norm(x: BlockKet, theta_: float, axis: str) -> Biquaternion:
    y = apply_phase(x, theta_, axis)
    return inner(y, y)

