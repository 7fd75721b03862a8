"""Unit-sphere loops of the Cayley-Dickson algebras, in chart coordinates.

The chart is the graph over the imaginary hyperplane: coordinates x with
|x| < 1 embed as sqrt(1 - |x|^2) e_0 + sum_i x^i e_{i+1}.  The identity sits
at the origin and inversion is coordinate negation.  Levels 1..3 only; the
sedenion sphere is not closed under multiplication and is rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cayley import CD
from .jets import jsqrt, value_of

UNIT_NORM_TOL = 1e-9


class ChartDomainError(ValueError):
    """A point or product left the chart (real part <= 0 or |x| >= 1)."""


class NotUnitError(ValueError):
    """An element claimed to lie on the unit sphere does not."""


@dataclass(frozen=True)
class LoopChart:
    level: int
    radius: float = 0.5

    def __post_init__(self):
        if not 1 <= self.level <= 3:
            raise ValueError("loop charts exist for levels 1..3 only")
        if not 0.0 < self.radius < 1.0:
            raise ValueError("sampling radius must lie in (0, 1)")

    @property
    def r(self) -> int:
        """Loop dimension (number of chart coordinates)."""
        return (1 << self.level) - 1

    @property
    def n(self) -> int:
        """Ambient algebra dimension."""
        return 1 << self.level

    def identity(self) -> list:
        return [0.0] * self.r

    def embed(self, x) -> CD:
        """Chart coordinates to a unit-norm ambient element."""
        s = 1.0
        for c in x:
            s = s - c * c
        if value_of(s) <= 0.0:
            raise ChartDomainError("coordinates outside the open unit ball")
        return CD((jsqrt(s),) + tuple(x))

    def project(self, u: CD) -> list:
        """Ambient unit element back to chart coordinates."""
        if abs(value_of(u.norm2()) - 1.0) > UNIT_NORM_TOL:
            raise NotUnitError("element is not on the unit sphere")
        if value_of(u.coeffs[0]) <= 0.0:
            raise ChartDomainError("element has non-positive real part")
        return list(u.coeffs[1:])

    def mul(self, x, y) -> list:
        return self.project(self.embed(x) * self.embed(y))

    def inv(self, x) -> list:
        return [-c for c in x]


def _dist(x, y) -> float:
    return math.sqrt(sum((float(a) - float(b)) ** 2 for a, b in zip(x, y)))


def moufang_residual(chart: LoopChart, a, g, h) -> float:
    """||(ag)(ha) - (a(gh))a|| in chart coordinates."""
    lhs = chart.mul(chart.mul(a, g), chart.mul(h, a))
    rhs = chart.mul(chart.mul(a, chart.mul(g, h)), a)
    return _dist(lhs, rhs)


def flexibility_residual(chart: LoopChart, a, g, h) -> float:
    """Disagreement between the two bracketings of a(gh)a."""
    gh = chart.mul(g, h)
    return _dist(chart.mul(chart.mul(a, gh), a), chart.mul(a, chart.mul(gh, a)))


def left_inverse_residual(chart: LoopChart, a, b) -> float:
    """||a (a^{-1} b) - b||; zero by the left inverse property."""
    x = chart.mul(a, chart.mul(chart.inv(a), b))
    return _dist(x, b)


def commutator_map(chart: LoopChart, g, h) -> list:
    """((gh) g^{-1}) h^{-1}, evaluated left to right."""
    return chart.mul(chart.mul(chart.mul(g, h), chart.inv(g)), chart.inv(h))


def commutator_map_alt(chart: LoopChart, g, h, bracketing: str) -> list:
    """Alternative bracketings of g h g^{-1} h^{-1} used as oracle cross-checks."""
    gi, hi = chart.inv(g), chart.inv(h)
    if bracketing == "pairs":
        return chart.mul(chart.mul(g, h), chart.mul(gi, hi))
    if bracketing == "right":
        return chart.mul(g, chart.mul(h, chart.mul(gi, hi)))
    raise ValueError(f"unknown bracketing {bracketing!r}")
