"""Rectangular matrices over :class:`~mirrorqm.biquat.Biquaternion`.

Storage is dense (tuple of row tuples) but products skip zero entries, which
keeps the exact-mode ladder blocks cheap.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .biquat import Biquaternion, deviation, random_biquaternion, zero
from .exact import scalar

MIRROR_HERMITIAN = "mirror_hermitian"
MIRROR_ANTIHERMITIAN = "mirror_antihermitian"
MIRROR_ANTIUNITARY = "mirror_antiunitary"
UNITARY = "unitary"


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class QMatrix:
    entries: tuple[tuple[Biquaternion, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise ShapeError("QMatrix needs at least one row and one column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ShapeError("ragged rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Biquaternion]]) -> "QMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def exact(self) -> bool:
        return self.entries[0][0].exact

    def __getitem__(self, ij: tuple[int, int]) -> Biquaternion:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "QMatrix") -> "QMatrix":
        return qmat_add(self, other)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        _check_same_shape(self, other)
        return QMatrix(tuple(
            tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)
        ))

    def __neg__(self) -> "QMatrix":
        return QMatrix(tuple(tuple(-a for a in row) for row in self.entries))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        return qmat_mul(self, other)

    def __rmul__(self, c) -> "QMatrix":
        # left scalar or left biquaternion multiplication of every entry
        return QMatrix(tuple(tuple(c * a for a in row) for row in self.entries))

    def mirror_conj(self) -> "QMatrix":
        return mirror_conj(self)

    def dagger(self) -> "QMatrix":
        return dagger(self)

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.entries for a in row)

    def to_float(self) -> "QMatrix":
        return QMatrix(tuple(tuple(a.to_float() for a in row) for row in self.entries))


def _check_same_shape(a: QMatrix, b: QMatrix) -> None:
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")


def zeros(rows: int, cols: int, exact: bool = True) -> QMatrix:
    z = zero(exact)
    return QMatrix(tuple(tuple(z for _ in range(cols)) for _ in range(rows)))


def identity(n: int, exact: bool = True) -> QMatrix:
    z = zero(exact)
    one = Biquaternion.from_scalar(1, exact)
    return QMatrix(tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)))


def from_cnumbers(m, exact: bool = True) -> QMatrix:
    """Embed a matrix of complex numbers as scalar biquaternions."""
    return QMatrix(tuple(
        tuple(Biquaternion.from_scalar(scalar(v, exact), exact) for v in row) for row in m
    ))


def qmat_add(a: QMatrix, b: QMatrix) -> QMatrix:
    _check_same_shape(a, b)
    return QMatrix(tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a.entries, b.entries)
    ))


def qmat_mul(a: QMatrix, b: QMatrix) -> QMatrix:
    """Row-into-column product; entries multiplied left-to-right."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    z = zero(a.exact)
    b_rows = [[(j, v) for j, v in enumerate(row) if not v.is_zero()] for row in b.entries]
    out = []
    for row in a.entries:
        acc: list[Biquaternion | None] = [None] * b.cols
        for k, aik in enumerate(row):
            if aik.is_zero():
                continue
            for j, bkj in b_rows[k]:
                term = aik * bkj
                acc[j] = term if acc[j] is None else acc[j] + term
        out.append(tuple(z if v is None else v for v in acc))
    return QMatrix(tuple(out))


def mirror_conj(m: QMatrix) -> QMatrix:
    """Mirror conjugate: entry (i, j) of an r x c input lands at
    (c - j + 1, r - i + 1) of the c x r output (1-based), mirror-conjugated."""
    r, c = m.shape
    out = [[None] * r for _ in range(c)]
    for i in range(r):
        for j in range(c):
            out[c - 1 - j][r - 1 - i] = m.entries[i][j].mirror()
    return QMatrix(tuple(tuple(row) for row in out))


def dagger(m: QMatrix) -> QMatrix:
    r, c = m.shape
    return QMatrix(tuple(tuple(m.entries[i][j].dagger() for i in range(r)) for j in range(c)))


def max_deviation(a: QMatrix, b: QMatrix) -> float:
    _check_same_shape(a, b)
    return max(
        (deviation(x, y) for ra, rb in zip(a.entries, b.entries) for x, y in zip(ra, rb)),
        default=0.0,
    )


def matrices_equal(a: QMatrix, b: QMatrix, tol: float = 0.0) -> bool:
    """Exact equality when ``tol == 0`` and both are exact, else max-deviation test."""
    if a.shape != b.shape:
        return False
    if tol == 0.0 and a.exact and b.exact:
        return a == b
    return max_deviation(a, b) <= tol


def classify(m: QMatrix, tol: float = 0.0) -> frozenset[str]:
    """Labels whose defining identity holds for ``m``.

    mirror_hermitian: M^m = -M;  mirror_antihermitian: M^m = +M;
    mirror_antiunitary: M M^m = -1;  unitary: M M^dagger = 1.
    """
    if m.rows != m.cols:
        raise ShapeError("classify needs a square matrix")
    one = identity(m.rows, m.exact)
    mm = m.mirror_conj()
    labels = set()
    if matrices_equal(mm, -m, tol):
        labels.add(MIRROR_HERMITIAN)
    if matrices_equal(mm, m, tol):
        labels.add(MIRROR_ANTIHERMITIAN)
    if matrices_equal(m @ mm, -one, tol):
        labels.add(MIRROR_ANTIUNITARY)
    if matrices_equal(m @ m.dagger(), one, tol):
        labels.add(UNITARY)
    return frozenset(labels)


def random_qmatrix(rng: random.Random, rows: int, cols: int, exact: bool = True) -> QMatrix:
    return QMatrix(tuple(
        tuple(random_biquaternion(rng, exact) for _ in range(cols)) for _ in range(rows)
    ))
