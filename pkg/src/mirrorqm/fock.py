"""Truncated ladder operators on occupation-number towers.

A tower with cutoff ``N`` keeps ``N + 1`` levels.  Index ``k`` stands for level
``k`` on the positive tower and level ``-k`` on the negative (mirror) tower, so
index 0 is the vacuum in both cases.

Every operator carries the set of column indices on which the truncation
gives the wrong answer (``invalid``).  Products propagate it, so identities can
be asserted on exactly the truncation-valid subspace.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

import numpy as np

from .exact import ExactScalar, magnitude, scalar, sqrt

Orientation = Literal["positive", "negative"]


class TowerMismatch(ValueError):
    pass


@dataclass(frozen=True)
class FockTower:
    orientation: Orientation
    cutoff: int

    def __post_init__(self):
        if self.orientation not in ("positive", "negative"):
            raise ValueError(f"unknown orientation {self.orientation!r}")
        if self.cutoff < 1:
            raise ValueError("cutoff must be >= 1")

    @property
    def dim(self) -> int:
        return self.cutoff + 1

    @property
    def levels(self) -> list[int]:
        sign = 1 if self.orientation == "positive" else -1
        return [sign * k for k in range(self.dim)]

    def index_of(self, level: int) -> int:
        k = level if self.orientation == "positive" else -level
        if not 0 <= k <= self.cutoff:
            raise ValueError(f"level {level} outside tower {self.levels[0]}..{self.levels[-1]}")
        return k


@dataclass(frozen=True, eq=False)
class FockOperator:
    tower: FockTower
    matrix: np.ndarray
    invalid: frozenset[int] = field(default_factory=frozenset)
    exact: bool = True

    @property
    def valid(self) -> list[int]:
        return [k for k in range(self.tower.dim) if k not in self.invalid]

    def _same_tower(self, other: "FockOperator") -> None:
        if self.tower != other.tower:
            raise TowerMismatch(f"{self.tower} vs {other.tower}")

    def __matmul__(self, other: "FockOperator") -> "FockOperator":
        self._same_tower(other)
        reach_bad = {
            j for j in range(other.tower.dim)
            if any(other.matrix[i, j] != 0 for i in self.invalid)
        }
        return FockOperator(
            self.tower,
            self.matrix @ other.matrix,
            frozenset(other.invalid | reach_bad),
            self.exact,
        )

    def __add__(self, other: "FockOperator") -> "FockOperator":
        self._same_tower(other)
        return FockOperator(self.tower, self.matrix + other.matrix,
                            self.invalid | other.invalid, self.exact)

    def __sub__(self, other: "FockOperator") -> "FockOperator":
        self._same_tower(other)
        return FockOperator(self.tower, self.matrix - other.matrix,
                            self.invalid | other.invalid, self.exact)

    def __neg__(self) -> "FockOperator":
        return FockOperator(self.tower, -self.matrix, self.invalid, self.exact)

    def scaled(self, c) -> "FockOperator":
        c = scalar(c, self.exact)
        return FockOperator(self.tower, self.matrix * c, self.invalid, self.exact)

    def dagger(self) -> "FockOperator":
        return FockOperator(self.tower, np.conj(self.matrix).T.copy(), self.invalid, self.exact)

    def apply(self, vec: np.ndarray) -> np.ndarray:
        return self.matrix @ vec

    def spectrum(self) -> list:
        """Diagonal entries of a diagonal operator, by level index."""
        off = self.matrix - np.diag(np.diag(self.matrix))
        if any(v != 0 for v in off.flat):
            raise ValueError("spectrum() is only defined here for diagonal operators")
        return list(np.diag(self.matrix))


def _zeros(dim: int, exact: bool) -> np.ndarray:
    if exact:
        m = np.empty((dim, dim), dtype=object)
        m.fill(ExactScalar())
        return m
    return np.zeros((dim, dim), dtype=complex)


def basis_vector(tower: FockTower, level: int, exact: bool = True) -> np.ndarray:
    v = np.array([scalar(0, exact)] * tower.dim, dtype=object if exact else complex)
    v[tower.index_of(level)] = scalar(1, exact)
    return v


def identity_op(tower: FockTower, exact: bool = True) -> FockOperator:
    m = _zeros(tower.dim, exact)
    for k in range(tower.dim):
        m[k, k] = scalar(1, exact)
    return FockOperator(tower, m, frozenset(), exact)


def ladder_pos(cutoff: int, exact: bool = True) -> tuple[FockOperator, FockOperator]:
    """``a|n> = sqrt(n)|n-1>`` and ``a_dag = dagger(a)``; the top level is
    flagged invalid for the creator."""
    tower = FockTower("positive", cutoff)
    a = _zeros(tower.dim, exact)
    for n in range(1, tower.dim):
        a[n - 1, n] = sqrt(n, exact)
    ann = FockOperator(tower, a, frozenset(), exact)
    cre = FockOperator(tower, ann.dagger().matrix, frozenset({cutoff}), exact)
    return ann, cre


def ladder_neg(cutoff: int, exact: bool = True) -> tuple[FockOperator, FockOperator]:
    """Mirror-tower ladder: ``a~|-n> = i sqrt(n)|-(n-1)>`` and
    ``a~dag|-(n-1)> = i sqrt(n)|-n>``.

    Hence ``a~dag a~ |-n> = -n |-n>`` and ``[a~, a~dag] = -1`` off the deepest level.
    """
    tower = FockTower("negative", cutoff)
    i = scalar(1j, exact)
    ann = _zeros(tower.dim, exact)
    cre = _zeros(tower.dim, exact)
    for n in range(1, tower.dim):
        ann[n - 1, n] = i * sqrt(n, exact)
        cre[n, n - 1] = i * sqrt(n, exact)
    return (
        FockOperator(tower, ann, frozenset(), exact),
        FockOperator(tower, cre, frozenset({cutoff}), exact),
    )


def number_op(ann: FockOperator, cre: FockOperator) -> FockOperator:
    return cre @ ann


def commutator(p: FockOperator, q: FockOperator) -> FockOperator:
    return p @ q - q @ p


def anticommutator(p: FockOperator, q: FockOperator) -> FockOperator:
    return p @ q + q @ p


def deviation_on(p: FockOperator, q: FockOperator, columns: Iterable[int] | None = None) -> float:
    """Max absolute entry difference, restricted to the given columns
    (default: columns valid for both operators)."""
    p._same_tower(q)
    if columns is None:
        columns = [k for k in p.valid if k not in q.invalid]
    cols = list(columns)
    if not cols:
        return 0.0
    diff = p.matrix[:, cols] - q.matrix[:, cols]
    return max(magnitude(v) for v in diff.flat)


def equal_on(p: FockOperator, q: FockOperator, columns: Iterable[int] | None = None,
             tol: float = 0.0) -> bool:
    if columns is None:
        columns = [k for k in p.valid if k not in q.invalid]
    cols = list(columns)
    if tol == 0.0 and p.exact and q.exact:
        return all(p.matrix[i, j] == q.matrix[i, j] for i in range(p.tower.dim) for j in cols)
    return deviation_on(p, q, cols) <= tol
