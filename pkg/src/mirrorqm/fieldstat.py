"""Regulated equal-space commutator function and the bracket sign table.

``delta_minus(t)`` integrates ``(1/2pi) * eps(p0) * exp(-i p0 t)`` over all
``p0`` with an ``exp(-eta |p0|)`` damping.  Folding the ``p0 < 0`` half onto
``p0 > 0`` gives

    (1/2pi) [ F(t) - F(-t) ],   F(t) = int_0^inf exp(-eta p) exp(-i p t) dp,

and the damped integral has the closed form ``-i t / (pi (t^2 + eta^2))``,
which tests use as an independent oracle.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Literal

import numpy as np
from scipy import integrate

Bracket = Literal["commutator", "anticommutator"]
Space = Literal["subluminal", "supraluminal"]
BRACKETS: tuple[Bracket, ...] = ("commutator", "anticommutator")
SPACES: tuple[Space, ...] = ("subluminal", "supraluminal")


class Statistics(str, Enum):
    BOSE_EINSTEIN = "BoseEinstein"
    FERMI_DIRAC = "FermiDirac"


class QuadratureError(RuntimeError):
    """The regulated integral did not converge to the requested tolerance."""


@dataclass(frozen=True)
class RegulatorConfig:
    """Damping and quadrature settings.

    ``method="qawf"`` uses QUADPACK's Fourier-weighted infinite-range rule.
    ``method="panels"`` integrates Gauss-Legendre panels of width ``step`` over
    ``[0, span]`` and refuses to run when the neglected tail
    ``exp(-eta*span)/eta`` exceeds ``tail_tol``.
    """

    eta: float = 1e-3
    method: Literal["qawf", "panels"] = "qawf"
    span: float | None = None
    step: float | None = None
    nodes: int = 16
    tail_tol: float = 1e-12
    epsabs: float = 1e-10
    limlst: int = 200

    def __post_init__(self):
        if not self.eta > 0:
            raise ValueError("eta must be positive")
        if self.method not in ("qawf", "panels"):
            raise ValueError(f"unknown method {self.method!r}")

    def resolved_span(self) -> float:
        if self.span is not None:
            return self.span
        # smallest whole span with exp(-eta*span)/eta <= tail_tol
        return float(math.ceil(math.log(1.0 / (self.eta * self.tail_tol)) / self.eta))


def delta_plus_prefactor() -> float:
    """Stand-in for the spacelike commutator function: only its being nonzero
    matters to the statistics argument."""
    return 1.0


def closed_form(t: float, eta: float) -> complex:
    return -1j * t / (math.pi * (t * t + eta * eta))


def _half_line_qawf(t: float, cfg: RegulatorConfig) -> complex:
    """F(t) = int_0^inf e^{-eta p} (cos pt - i sin pt) dp via QAWF."""
    damp = lambda p: math.exp(-cfg.eta * p)  # noqa: E731
    if t == 0.0:
        return complex(1.0 / cfg.eta)
    parts = []
    for weight in ("cos", "sin"):
        with warnings.catch_warnings():
            warnings.simplefilter("error", integrate.IntegrationWarning)
            try:
                val, err = integrate.quad(damp, 0.0, np.inf, weight=weight, wvar=t,
                                          epsabs=cfg.epsabs, limlst=cfg.limlst)
            except integrate.IntegrationWarning as exc:
                raise QuadratureError(f"QAWF failed at t={t}, eta={cfg.eta}: {exc}") from exc
        parts.append(val)
    return complex(parts[0], -parts[1])


def _half_line_panels(t: float, cfg: RegulatorConfig) -> complex:
    span = cfg.resolved_span()
    tail = math.exp(-cfg.eta * span) / cfg.eta
    if tail > cfg.tail_tol:
        raise QuadratureError(
            f"span {span:g} leaves a tail bound {tail:.3e} above tail_tol {cfg.tail_tol:.1e}"
        )
    step = cfg.step
    if step is None:
        # a quarter oscillation per panel, never wider than one decay length
        step = min(0.5 * math.pi / max(abs(t), 1e-12), 1.0 / cfg.eta)
    n_panels = max(1, math.ceil(span / step))
    x, w = np.polynomial.legendre.leggauss(cfg.nodes)
    edges = np.linspace(0.0, span, n_panels + 1)
    left, right = edges[:-1, None], edges[1:, None]
    half = 0.5 * (right - left)
    p = (left + right) * 0.5 + half * x[None, :]
    vals = np.exp(-cfg.eta * p - 1j * p * t) * (half * w[None, :])
    return complex(vals.sum())


def delta_minus(t: float, cfg: RegulatorConfig | None = None) -> complex:
    """Regulated ``Delta_-(t)``; raises :class:`QuadratureError` on non-convergence."""
    cfg = cfg or RegulatorConfig()
    half_line = _half_line_qawf if cfg.method == "qawf" else _half_line_panels
    pos = half_line(t, cfg)   # p0 > 0, eps = +1
    neg = half_line(-t, cfg)  # p0 < 0 folded, eps = -1
    return (pos - neg) / (2.0 * math.pi)


@dataclass(frozen=True)
class FieldCoefficients:
    kappa: complex
    lam: complex

    def __post_init__(self):
        if self.kappa == 0 and self.lam == 0:
            raise ValueError("kappa and lambda cannot both vanish")


# sign multiplying |lambda|^2 in the prefactor of Delta_+ (subluminal) or Delta_- (supraluminal)
_SIGN_TABLE: dict[tuple[Space, Bracket], int] = {
    ("subluminal", "commutator"): -1,
    ("subluminal", "anticommutator"): +1,
    ("supraluminal", "commutator"): +1,
    ("supraluminal", "anticommutator"): -1,
}


def bracket_coefficient(c: FieldCoefficients, bracket: Bracket, space: Space) -> float:
    """Prefactor ``|kappa|^2 -+ |lambda|^2`` of the commutator function."""
    try:
        sign = _SIGN_TABLE[(space, bracket)]
    except KeyError:
        raise ValueError(f"unknown bracket/space pair {(bracket, space)!r}") from None
    return _modsq(c.kappa) + sign * _modsq(c.lam)


def _modsq(z: complex) -> float:
    z = complex(z)
    return (z * z.conjugate()).real


def vanishing_brackets(space: Space) -> list[Bracket]:
    """Brackets whose prefactor has a nontrivial zero (|kappa| = |lambda| != 0)."""
    probes = [FieldCoefficients(1, 1), FieldCoefficients(1, 1j),
              FieldCoefficients(2 - 1j, 1 + 2j), FieldCoefficients(-0.5, 0.5j)]
    return [
        b for b in BRACKETS
        if all(bracket_coefficient(p, b, space) == 0 for p in probes)
    ]


def select_statistics(space: Space) -> Statistics:
    found = vanishing_brackets(space)
    if len(found) != 1:
        raise RuntimeError(f"expected exactly one vanishing bracket for {space}, got {found}")
    return Statistics.BOSE_EINSTEIN if found[0] == "commutator" else Statistics.FERMI_DIRAC
