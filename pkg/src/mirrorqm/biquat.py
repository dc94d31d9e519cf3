"""Biquaternions ``w + x I + y J + z K`` with complex coefficients.

The units are fixed by the Pauli realization ``I = i tau1``, ``J = i tau2``,
``K = i tau3``.  That realization is the ground truth for every product rule
here; in particular it gives ``IJ = -K`` and ``IJK = +1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from .exact import ExactScalar, magnitude, scalar

_SCALARS = (int, float, complex, Fraction, ExactScalar, np.number)


@dataclass(frozen=True)
class Biquaternion:
    w: Any
    x: Any
    y: Any
    z: Any

    @classmethod
    def from_scalar(cls, c, exact: bool = True) -> "Biquaternion":
        zero = scalar(0, exact)
        return cls(scalar(c, exact), zero, zero, zero)

    @property
    def exact(self) -> bool:
        return isinstance(self.w, ExactScalar)

    @property
    def coeffs(self) -> tuple:
        return (self.w, self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return not (self.w or self.x or self.y or self.z)

    def is_scalar(self) -> bool:
        return not (self.x or self.y or self.z)

    def to_float(self) -> "Biquaternion":
        return Biquaternion(*(complex(c) for c in self.coeffs))

    def __add__(self, other: "Biquaternion") -> "Biquaternion":
        if not isinstance(other, Biquaternion):
            return NotImplemented
        return Biquaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Biquaternion") -> "Biquaternion":
        if not isinstance(other, Biquaternion):
            return NotImplemented
        return Biquaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Biquaternion":
        return Biquaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other) -> "Biquaternion":
        if isinstance(other, Biquaternion):
            return quat_mul(self, other)
        if not isinstance(other, _SCALARS):
            return NotImplemented
        # complex scalars are central: i commutes with every i*tau_k
        return Biquaternion(self.w * other, self.x * other, self.y * other, self.z * other)

    def __rmul__(self, other) -> "Biquaternion":
        if not isinstance(other, _SCALARS):
            return NotImplemented
        return Biquaternion(other * self.w, other * self.x, other * self.y, other * self.z)

    def __truediv__(self, other) -> "Biquaternion":
        return Biquaternion(self.w / other, self.x / other, self.y / other, self.z / other)

    def mirror(self) -> "Biquaternion":
        return quat_mirror(self)

    def dagger(self) -> "Biquaternion":
        return quat_dagger(self)

    def __repr__(self) -> str:
        return f"Biquaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"


def quat_mul(a: Biquaternion, b: Biquaternion) -> Biquaternion:
    # Structure constants of the Pauli realization: e_a e_b = -delta_ab - eps_abc e_c.
    w = a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z
    x = a.w * b.x + a.x * b.w - (a.y * b.z - a.z * b.y)
    y = a.w * b.y + a.y * b.w - (a.z * b.x - a.x * b.z)
    z = a.w * b.z + a.z * b.w - (a.x * b.y - a.y * b.x)
    return Biquaternion(w, x, y, z)


def quat_mirror(q: Biquaternion) -> Biquaternion:
    """Mirror conjugation of a single biquaternion: ``I -> -I``, ``J -> J``,
    ``K -> K``, complex coefficients conjugated."""
    return Biquaternion(q.w.conjugate(), -q.x.conjugate(), q.y.conjugate(), q.z.conjugate())


def quat_dagger(q: Biquaternion) -> Biquaternion:
    """Conjugate-transpose of the 2x2 realization, mapped back."""
    return Biquaternion(q.w.conjugate(), -q.x.conjugate(), -q.y.conjugate(), -q.z.conjugate())


def to_matrix(q: Biquaternion) -> np.ndarray:
    """2x2 complex realization ``w + x i tau1 + y i tau2 + z i tau3``.

    Exact biquaternions give an object array of :class:`ExactScalar`.
    """
    i = scalar(1j, q.exact)
    m = [
        [q.w + i * q.z, i * q.x + q.y],
        [i * q.x - q.y, q.w - i * q.z],
    ]
    return np.array(m, dtype=object if q.exact else complex)


def from_matrix(m) -> Biquaternion:
    """Inverse of :func:`to_matrix`; accepts any 2x2 complex (or exact) matrix."""
    m = np.asarray(m)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    exact = any(isinstance(v, ExactScalar) for v in (a, b, c, d)) or m.dtype == object
    a, b, c, d = (scalar(v, exact) for v in (a, b, c, d))
    half = scalar(Fraction(1, 2), exact)
    minus_half_i = scalar(-0.5j, exact)  # 1/(2i)
    return Biquaternion(
        (a + d) * half,
        (b + c) * minus_half_i,
        (b - c) * half,
        (a - d) * minus_half_i,
    )


def units(exact: bool = True) -> tuple[Biquaternion, Biquaternion, Biquaternion, Biquaternion]:
    """Return ``(1, I, J, K)`` in the requested arithmetic mode."""
    o, z = scalar(1, exact), scalar(0, exact)
    return (
        Biquaternion(o, z, z, z),
        Biquaternion(z, o, z, z),
        Biquaternion(z, z, o, z),
        Biquaternion(z, z, z, o),
    )


def zero(exact: bool = True) -> Biquaternion:
    z = scalar(0, exact)
    return Biquaternion(z, z, z, z)


def commutator(a: Biquaternion, b: Biquaternion) -> Biquaternion:
    return a * b - b * a


def deviation(a: Biquaternion, b: Biquaternion) -> float:
    """Largest coefficient-wise absolute difference."""
    return max(magnitude(p - q) for p, q in zip(a.coeffs, b.coeffs))


def expm_unit(theta: float, unit: Biquaternion) -> Biquaternion:
    """``exp(theta * U) = cos(theta) + U sin(theta)`` for a unit with ``U^2 = -1``,
    evaluated through the 2x2 realization (float mode)."""
    u = to_matrix(unit.to_float()).astype(complex)
    if not np.allclose(u @ u, -np.eye(2)):
        raise ValueError("expm_unit needs a unit squaring to -1")
    m = np.cos(theta) * np.eye(2) + np.sin(theta) * u
    return from_matrix(m)


def random_biquaternion(rng: random.Random, exact: bool = True, spread: int = 3) -> Biquaternion:
    """Random biquaternion; exact mode draws small Gaussian rationals."""
    if exact:
        def draw():
            re = Fraction(rng.randint(-spread, spread), rng.choice((1, 1, 2, 3)))
            im = Fraction(rng.randint(-spread, spread), rng.choice((1, 1, 2, 3)))
            return ExactScalar.gaussian(re, im)
    else:
        def draw():
            return complex(rng.gauss(0.0, 1.0), rng.gauss(0.0, 1.0))
    return Biquaternion(draw(), draw(), draw(), draw())
