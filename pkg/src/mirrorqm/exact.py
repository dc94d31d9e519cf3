"""Exact scalars for the algebraic checks.

Ladder matrices carry sqrt(n) and the mirror rays carry 1/sqrt(2), so plain
Gaussian rationals are not closed under the operations we need.  An
:class:`ExactScalar` is a finite sum ``sum_s (a_s + i b_s) * sqrt(s)`` over
square-free positive integers ``s`` with rational ``a_s, b_s``.  Square roots
of distinct square-free integers (and ``i``) are linearly independent over Q,
so the canonical dict form makes ``==`` a true field equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

Number = Union[int, float, complex, Fraction, "ExactScalar"]

_ZERO = Fraction(0)


@lru_cache(maxsize=None)
def _squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(g, s)`` with ``n == g*g*s`` and ``s`` square-free."""
    if n <= 0:
        raise ValueError(f"expected a positive integer, got {n}")
    g, s = 1, 1
    d = 2
    while d * d <= n:
        while n % (d * d) == 0:
            n //= d * d
            g *= d
        if n % d == 0:
            n //= d
            s *= d
        d += 1
    return g, s * n


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise ValueError("cannot represent a non-finite float exactly")
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Fraction")


class ExactScalar:
    """Element of Q(i, sqrt 2, sqrt 3, ...); immutable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[int, tuple[Fraction, Fraction]] | None = None):
        clean = {}
        if terms:
            for s, (re, im) in terms.items():
                if re or im:
                    clean[s] = (re, im)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, tuple[Fraction, Fraction]]) -> "ExactScalar":
        # caller guarantees no zero entries
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- construction -------------------------------------------------------
    @classmethod
    def coerce(cls, x: Number) -> "ExactScalar":
        if isinstance(x, ExactScalar):
            return x
        if isinstance(x, complex):
            return cls({1: (_as_fraction(x.real), _as_fraction(x.imag))})
        return cls({1: (_as_fraction(x), _ZERO)})

    @classmethod
    def gaussian(cls, re, im=0) -> "ExactScalar":
        return cls({1: (_as_fraction(re), _as_fraction(im))})

    @classmethod
    def sqrt(cls, x) -> "ExactScalar":
        """Exact square root of a non-negative rational."""
        q = _as_fraction(x)
        if q < 0:
            raise ValueError("sqrt of a negative rational; multiply by i explicitly")
        if q == 0:
            return cls()
        # sqrt(p/q) = sqrt(p*q)/q
        g, s = _squarefree_split(q.numerator * q.denominator)
        return cls({s: (Fraction(g, q.denominator), _ZERO)})

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[int, tuple[Fraction, Fraction]]:
        return dict(self._terms)

    def is_gaussian_rational(self) -> bool:
        return set(self._terms) <= {1}

    def __complex__(self) -> complex:
        total = 0j
        for s, (re, im) in self._terms.items():
            total += complex(float(re), float(im)) * math.sqrt(s)
        return total

    def __abs__(self) -> float:
        return abs(complex(self))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for s in sorted(self._terms):
            re, im = self._terms[s]
            coef = f"({re}{'+' if im >= 0 else '-'}{abs(im)}i)" if im else f"{re}"
            parts.append(coef if s == 1 else f"{coef}*sqrt({s})")
        return " + ".join(parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactScalar):
            try:
                other = ExactScalar.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic ---------------------------------------------------------
    def __neg__(self) -> "ExactScalar":
        return ExactScalar._raw({s: (-re, -im) for s, (re, im) in self._terms.items()})

    def __pos__(self) -> "ExactScalar":
        return self

    def conjugate(self) -> "ExactScalar":
        return ExactScalar._raw({s: (re, -im) for s, (re, im) in self._terms.items()})

    def __add__(self, other) -> "ExactScalar":
        if type(other) is not ExactScalar:
            try:
                other = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for s, (re, im) in other._terms.items():
            if s in out:
                r0, i0 = out[s]
                out[s] = (r0 + re, i0 + im)
            else:
                out[s] = (re, im)
        return ExactScalar(out)

    __radd__ = __add__

    def __sub__(self, other) -> "ExactScalar":
        try:
            other = ExactScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ExactScalar":
        return ExactScalar.coerce(other) - self

    def __mul__(self, other) -> "ExactScalar":
        if type(other) is not ExactScalar:
            try:
                other = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
        t1, t2 = self._terms, other._terms
        if not t1 or not t2:
            return ExactScalar._raw({})
        if len(t1) == 1 and len(t2) == 1 and 1 in t1 and 1 in t2:
            a1, b1 = t1[1]
            a2, b2 = t2[1]
            re = a1 * a2 - b1 * b2
            im = a1 * b2 + b1 * a2
            return ExactScalar._raw({1: (re, im)} if re or im else {})
        out: dict[int, tuple[Fraction, Fraction]] = {}
        for s1, (a1, b1) in self._terms.items():
            for s2, (a2, b2) in other._terms.items():
                g = math.gcd(s1, s2)
                s = (s1 // g) * (s2 // g)
                re = (a1 * a2 - b1 * b2) * g
                im = (a1 * b2 + b1 * a2) * g
                if s in out:
                    r0, i0 = out[s]
                    out[s] = (r0 + re, i0 + im)
                else:
                    out[s] = (re, im)
        return ExactScalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ExactScalar":
        # Only Gaussian-rational divisors are needed (factors like 2 and 2i).
        other = ExactScalar.coerce(other)
        if not other:
            raise ZeroDivisionError("ExactScalar division by zero")
        if not other.is_gaussian_rational():
            raise ValueError("division by an irrational ExactScalar is not supported")
        re, im = other._terms[1]
        den = re * re + im * im
        inv = ExactScalar({1: (re / den, -im / den)})
        return self * inv


def scalar(x: Number, exact: bool):
    """Coerce ``x`` into the scalar type of the requested arithmetic mode."""
    if exact:
        return ExactScalar.coerce(x)
    return complex(x)


def sqrt(x, exact: bool):
    """Square root of a non-negative rational, in either mode."""
    if exact:
        return ExactScalar.sqrt(x)
    return complex(math.sqrt(float(x)))


def magnitude(x) -> float:
    return float(abs(x))
