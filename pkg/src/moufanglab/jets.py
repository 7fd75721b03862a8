"""Forward-mode jets and the finite-difference oracle used to cross-check them.

A Jet1 carries a value and one directional derivative; a Jet2 carries a
value, two directional derivatives and the mixed second partial.  Arithmetic
is overloaded so that any map written with +, -, *, / and jsqrt evaluates
unchanged over plain floats or jets.  Jets are the primary differentiation
mechanism; finite differences exist only as an independent oracle.
"""

from __future__ import annotations

import math

import numpy as np


class DomainError(ArithmeticError):
    """A lifted operation left its analytic domain (e.g. sqrt at <= 0)."""


def value_of(s):
    """Value part of a scalar: jets expose .value, plain numbers pass through."""
    return getattr(s, "value", s)


class Jet1:
    """Scalar value plus the directional derivative along one seed direction."""

    __slots__ = ("value", "deriv")

    def __init__(self, value, deriv=0.0):
        self.value = value
        self.deriv = deriv

    def __repr__(self):
        return f"Jet1({self.value!r}, {self.deriv!r})"

    def __add__(self, other):
        if isinstance(other, Jet1):
            return Jet1(self.value + other.value, self.deriv + other.deriv)
        return Jet1(self.value + other, self.deriv)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Jet1):
            return Jet1(self.value - other.value, self.deriv - other.deriv)
        return Jet1(self.value - other, self.deriv)

    def __rsub__(self, other):
        return Jet1(other - self.value, -self.deriv)

    def __neg__(self):
        return Jet1(-self.value, -self.deriv)

    def __mul__(self, other):
        if isinstance(other, Jet1):
            return Jet1(
                self.value * other.value,
                self.value * other.deriv + self.deriv * other.value,
            )
        return Jet1(self.value * other, self.deriv * other)

    def __rmul__(self, other):
        return Jet1(self.value * other, self.deriv * other)

    def __truediv__(self, other):
        if isinstance(other, Jet1):
            q = self.value / other.value
            return Jet1(q, (self.deriv - q * other.deriv) / other.value)
        return Jet1(self.value / other, self.deriv / other)

    def __rtruediv__(self, other):
        q = other / self.value
        return Jet1(q, -q * self.deriv / self.value)


class Jet2:
    """Scalar value, two directional derivatives and their mixed second partial."""

    __slots__ = ("value", "du", "dv", "dudv")

    def __init__(self, value, du=0.0, dv=0.0, dudv=0.0):
        self.value = value
        self.du = du
        self.dv = dv
        self.dudv = dudv

    def __repr__(self):
        return f"Jet2({self.value!r}, {self.du!r}, {self.dv!r}, {self.dudv!r})"

    def __add__(self, other):
        if isinstance(other, Jet2):
            return Jet2(
                self.value + other.value,
                self.du + other.du,
                self.dv + other.dv,
                self.dudv + other.dudv,
            )
        return Jet2(self.value + other, self.du, self.dv, self.dudv)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Jet2):
            return Jet2(
                self.value - other.value,
                self.du - other.du,
                self.dv - other.dv,
                self.dudv - other.dudv,
            )
        return Jet2(self.value - other, self.du, self.dv, self.dudv)

    def __rsub__(self, other):
        return Jet2(other - self.value, -self.du, -self.dv, -self.dudv)

    def __neg__(self):
        return Jet2(-self.value, -self.du, -self.dv, -self.dudv)

    def __mul__(self, other):
        if isinstance(other, Jet2):
            return Jet2(
                self.value * other.value,
                self.value * other.du + self.du * other.value,
                self.value * other.dv + self.dv * other.value,
                self.value * other.dudv
                + self.du * other.dv
                + self.dv * other.du
                + self.dudv * other.value,
            )
        return Jet2(self.value * other, self.du * other, self.dv * other, self.dudv * other)

    def __rmul__(self, other):
        return Jet2(self.value * other, self.du * other, self.dv * other, self.dudv * other)

    def __truediv__(self, other):
        if isinstance(other, Jet2):
            q = self.value / other.value
            qu = (self.du - q * other.du) / other.value
            qv = (self.dv - q * other.dv) / other.value
            quv = (self.dudv - qu * other.dv - qv * other.du - q * other.dudv) / other.value
            return Jet2(q, qu, qv, quv)
        return Jet2(self.value / other, self.du / other, self.dv / other, self.dudv / other)

    def __rtruediv__(self, other):
        return Jet2(other) / self


def jsqrt(x):
    """Square root lifted over floats and jets; requires a positive value part."""
    if isinstance(x, Jet1):
        if x.value <= 0.0:
            raise DomainError(f"sqrt of non-positive jet value {x.value}")
        s = math.sqrt(x.value)
        return Jet1(s, x.deriv / (2.0 * s))
    if isinstance(x, Jet2):
        if x.value <= 0.0:
            raise DomainError(f"sqrt of non-positive jet value {x.value}")
        s = math.sqrt(x.value)
        su = x.du / (2.0 * s)
        sv = x.dv / (2.0 * s)
        suv = x.dudv / (2.0 * s) - x.du * x.dv / (4.0 * s * x.value)
        return Jet2(s, su, sv, suv)
    xf = float(x)
    if xf < 0.0:
        raise DomainError(f"sqrt of negative value {xf}")
    return math.sqrt(xf)


def _parts1(ys):
    vals, ders = [], []
    for y in ys:
        if isinstance(y, Jet1):
            vals.append(y.value)
            ders.append(y.deriv)
        else:
            vals.append(float(y))
            ders.append(0.0)
    return np.array(vals), np.array(ders)


def jet1_eval(f, x, u):
    """Evaluate f and its directional derivative Df(x).u in one forward pass."""
    xs = [Jet1(float(a), float(b)) for a, b in zip(x, u)]
    return _parts1(f(xs))


def jet2_eval(f, x, u, v):
    """Evaluate f, both directional derivatives and the mixed second partial."""
    xs = [Jet2(float(a), float(b), float(c), 0.0) for a, b, c in zip(x, u, v)]
    vals, dus, dvs, duvs = [], [], [], []
    for y in f(xs):
        if isinstance(y, Jet2):
            vals.append(y.value)
            dus.append(y.du)
            dvs.append(y.dv)
            duvs.append(y.dudv)
        else:
            vals.append(float(y))
            dus.append(0.0)
            dvs.append(0.0)
            duvs.append(0.0)
    return np.array(vals), np.array(dus), np.array(dvs), np.array(duvs)


def fd_directional(f, x, u, h=1e-5):
    """Central-difference directional derivative (f(x+hu) - f(x-hu)) / 2h."""
    x = np.asarray(x, dtype=float)
    u = np.asarray(u, dtype=float)
    fp = np.asarray(f(x + h * u), dtype=float)
    fm = np.asarray(f(x - h * u), dtype=float)
    return (fp - fm) / (2.0 * h)


def fd_mixed(f, x, u, v, h=1e-4):
    """Four-point central difference for the mixed second directional derivative."""
    x = np.asarray(x, dtype=float)
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    fpp = np.asarray(f(x + h * u + h * v), dtype=float)
    fpm = np.asarray(f(x + h * u - h * v), dtype=float)
    fmp = np.asarray(f(x - h * u + h * v), dtype=float)
    fmm = np.asarray(f(x - h * u - h * v), dtype=float)
    return (fpp - fpm - fmp + fmm) / (4.0 * h * h)


class JetDiffer:
    """Differentiation backend driving checks with forward-mode jets."""

    kind = "jet"

    def directional(self, f, x, u):
        return jet1_eval(f, x, u)

    def mixed(self, f, x, u, v):
        return jet2_eval(f, x, u, v)


class FdDiffer:
    """Finite-difference backend; accuracy is limited by the step sizes."""

    kind = "fd"

    def __init__(self, h1=1e-6, h2=1e-4):
        self.h1 = h1
        self.h2 = h2

    def directional(self, f, x, u):
        val = np.asarray(f(np.asarray(x, dtype=float)), dtype=float)
        return val, fd_directional(f, x, u, self.h1)

    def mixed(self, f, x, u, v):
        val = np.asarray(f(np.asarray(x, dtype=float)), dtype=float)
        du = fd_directional(f, x, u, self.h1)
        dv = fd_directional(f, x, v, self.h1)
        duv = fd_mixed(f, x, u, v, self.h2)
        return val, du, dv, duv


def make_differ(kind):
    if kind == "jet":
        return JetDiffer()
    if kind == "fd":
        return FdDiffer()
    raise ValueError(f"unknown differentiation backend {kind!r}")
