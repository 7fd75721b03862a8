"""Cayley-Dickson algebras over generic scalars.

Levels 0..4 give the reals, complexes, quaternions, octonions and sedenions.
The doubling product is fixed to

    (a, b)(c, d) = (ac - conj(d) b,  da + b conj(c))

and every sign-table value in this package and its tests is relative to that
convention.  Coefficients may be plain floats or jets; only +, -, * are used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .jets import value_of

MAX_LEVEL = 4
_LEVEL_OF_LEN = {1: 0, 2: 1, 4: 2, 8: 3, 16: 4}


class ZeroDivisorError(ZeroDivisionError):
    """Inverse requested for an element of zero norm."""


def _conj(t):
    return (t[0],) + tuple(-c for c in t[1:])


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mul(a, b):
    n = len(a)
    if n == 1:
        return (a[0] * b[0],)
    h = n // 2
    a1, a2 = a[:h], a[h:]
    c1, c2 = b[:h], b[h:]
    left = _sub(_mul(a1, c1), _mul(_conj(c2), a2))
    right = _add(_mul(c2, a1), _mul(a2, _conj(c1)))
    return left + right


class CD:
    """Cayley-Dickson element: 2^level coefficients over the basis e_0..e_{2^level-1}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) not in _LEVEL_OF_LEN:
            raise ValueError(f"coefficient count {len(coeffs)} is not 2^k with k <= {MAX_LEVEL}")
        self.coeffs = coeffs

    @property
    def level(self) -> int:
        return _LEVEL_OF_LEN[len(self.coeffs)]

    @classmethod
    def zero(cls, level: int) -> "CD":
        return cls((0.0,) * (1 << level))

    @classmethod
    def unit(cls, level: int) -> "CD":
        return cls.basis(level, 0)

    @classmethod
    def basis(cls, level: int, i: int, coeff=1.0) -> "CD":
        n = 1 << level
        if not 0 <= i < n:
            raise ValueError(f"basis index {i} out of range for level {level}")
        return cls(tuple(coeff if j == i else 0.0 for j in range(n)))

    def _check_level(self, other: "CD"):
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("level mismatch")

    def __add__(self, other):
        self._check_level(other)
        return CD(_add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check_level(other)
        return CD(_sub(self.coeffs, other.coeffs))

    def __neg__(self):
        return CD(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, CD):
            self._check_level(other)
            return CD(_mul(self.coeffs, other.coeffs))
        return CD(tuple(c * other for c in self.coeffs))

    def __rmul__(self, other):
        return CD(tuple(other * c for c in self.coeffs))

    def conj(self) -> "CD":
        return CD(_conj(self.coeffs))

    def norm2(self):
        """Sum of squared coefficients; equals a * conj(a) at every level."""
        acc = self.coeffs[0] * self.coeffs[0]
        for c in self.coeffs[1:]:
            acc = acc + c * c
        return acc

    def inv(self) -> "CD":
        n2 = self.norm2()
        if value_of(n2) == 0.0:
            raise ZeroDivisorError("inverse of zero-norm element")
        return self.conj() * (1.0 / n2)

    def norm(self) -> float:
        return math.sqrt(float(self.norm2()))

    def __repr__(self):
        return f"CD({list(self.coeffs)!r})"


@dataclass(frozen=True)
class BasisTable:
    """Signed basis products: e_i e_j = sign[i][j] * e_index[i][j]."""

    level: int
    sign: tuple
    index: tuple

    def to_json_dict(self) -> dict:
        entries = []
        n = 1 << self.level
        for i in range(n):
            for j in range(n):
                entries.append(
                    {"i": i, "j": j, "sign": self.sign[i][j], "m": self.index[i][j]}
                )
        return {"level": self.level, "entries": entries}


@lru_cache(maxsize=None)
def basis_table(level: int) -> BasisTable:
    if not 1 <= level <= MAX_LEVEL:
        raise ValueError(f"level must be in 1..{MAX_LEVEL}")
    n = 1 << level
    sign = []
    index = []
    for i in range(n):
        srow = []
        irow = []
        for j in range(n):
            prod = CD.basis(level, i) * CD.basis(level, j)
            nz = [(m, c) for m, c in enumerate(prod.coeffs) if c != 0.0]
            assert len(nz) == 1 and abs(nz[0][1]) == 1.0
            m, c = nz[0]
            srow.append(1 if c > 0 else -1)
            irow.append(m)
        sign.append(tuple(srow))
        index.append(tuple(irow))
    return BasisTable(level, tuple(sign), tuple(index))


def alternativity_residual(a: CD, b: CD) -> float:
    """max(||(aa)b - a(ab)||, ||(ab)b - a(bb)||); zero in alternative algebras."""
    left = (a * a) * b - a * (a * b)
    right = (a * b) * b - a * (b * b)
    return max(left.norm(), right.norm())


@lru_cache(maxsize=None)
def mul_tensor(level: int):
    """Dense product tensor t[m][i][j] with (e_i e_j)_m = t[m][i][j]."""
    import numpy as np

    table = basis_table(level)
    n = 1 << level
    t = np.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            t[table.index[i][j], i, j] = table.sign[i][j]
    return t
