"""Birepresentations: paired left/right matrix maps over a loop chart.

The canonical instance sends a chart point to the matrices of left and right
multiplication by its ambient embedding.  Both maps are jet-capable: they
accept chart coordinates whose entries are floats or jets and return the
matrix as nested lists of the same scalar kind.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .cayley import basis_table
from .linalg import frobenius_norm
from .loops import LoopChart


@dataclass(frozen=True)
class Birepresentation:
    """Coordinate-parameterized maps g -> S_g, g -> T_g into n x n matrices."""

    level: int
    r: int
    n: int
    s_map: object
    t_map: object
    label: str

    def S(self, g) -> np.ndarray:
        return np.array(self.s_map(g), dtype=float)

    def T(self, g) -> np.ndarray:
        return np.array(self.t_map(g), dtype=float)


def left_mul_matrix(table, coeffs):
    """Matrix of u -> x u for x with the given coefficients; generic scalars."""
    n = len(coeffs)
    m = [[0.0] * n for _ in range(n)]
    sign, index = table.sign, table.index
    for a in range(n):
        xa = coeffs[a]
        for b in range(n):
            m[index[a][b]][b] = m[index[a][b]][b] + sign[a][b] * xa
    return m


def right_mul_matrix(table, coeffs):
    """Matrix of u -> u x for x with the given coefficients; generic scalars."""
    n = len(coeffs)
    m = [[0.0] * n for _ in range(n)]
    sign, index = table.sign, table.index
    for a in range(n):
        xa = coeffs[a]
        for b in range(n):
            m[index[b][a]][b] = m[index[b][a]][b] + sign[b][a] * xa
    return m


def canonical_lr(level: int) -> Birepresentation:
    """Left/right multiplication birepresentation on the ambient algebra."""
    chart = LoopChart(level)
    table = basis_table(level)

    def s_map(coords):
        return left_mul_matrix(table, chart.embed(coords).coeffs)

    def t_map(coords):
        return right_mul_matrix(table, chart.embed(coords).coeffs)

    return Birepresentation(level, chart.r, chart.n, s_map, t_map, "canonical-lr")


def birep_residuals(b: Birepresentation, chart: LoopChart, g, h) -> tuple[float, float, float]:
    """Frobenius residuals of the two defining axioms plus ||S_e - 1||."""
    sg, sh = b.S(g), b.S(h)
    tg, th = b.T(g), b.T(h)
    sgh = b.S(chart.mul(g, h))
    thg = b.T(chart.mul(h, g))
    r1 = frobenius_norm(tg @ sg @ sh - sgh @ tg)
    r2 = frobenius_norm(sg @ tg @ th - thg @ sg)
    r3 = frobenius_norm(b.S(chart.identity()) - np.eye(b.n))
    return r1, r2, r3


def associativity_residuals(b: Birepresentation, chart: LoopChart, g, h) -> tuple[float, float, float]:
    """Residuals of S_g S_h = S_{gh}, T_g T_h = T_{hg}, S_g T_h = T_h S_g."""
    sg, sh = b.S(g), b.S(h)
    tg, th = b.T(g), b.T(h)
    r1 = frobenius_norm(sg @ sh - b.S(chart.mul(g, h)))
    r2 = frobenius_norm(tg @ th - b.T(chart.mul(h, g)))
    r3 = frobenius_norm(sg @ th - th @ sg)
    return r1, r2, r3


@dataclass(frozen=True)
class SampleBirep:
    """Sample-table birepresentation: matrices known at listed points only.

    Usable for axiom checking alone; it cannot be differentiated.
    """

    r: int
    n: int
    points: tuple
    s_mats: tuple
    t_mats: tuple

    def lookup(self, coords, tol: float = 1e-9):
        c = np.asarray(coords, dtype=float)
        for idx, p in enumerate(self.points):
            if np.max(np.abs(p - c)) <= tol:
                return idx
        return None


def load_sample_birep(payload) -> SampleBirep:
    """Parse the {r, n, samples:[{g, S, T}]} JSON form."""
    if isinstance(payload, (str, bytes)):
        payload = json.loads(payload)
    r = int(payload["r"])
    n = int(payload["n"])
    points, s_mats, t_mats = [], [], []
    for rec in payload["samples"]:
        g = np.asarray(rec["g"], dtype=float)
        s = np.asarray(rec["S"], dtype=float)
        t = np.asarray(rec["T"], dtype=float)
        if g.shape != (r,) or s.shape != (n, n) or t.shape != (n, n):
            raise ValueError("sample shapes inconsistent with declared r, n")
        points.append(g)
        s_mats.append(s)
        t_mats.append(t)
    return SampleBirep(r, n, tuple(points), tuple(s_mats), tuple(t_mats))


def sample_axiom_residuals(sb: SampleBirep, chart: LoopChart) -> tuple[float, float, int]:
    """Axiom residuals over every sample pair whose products are also sampled."""
    if chart.r != sb.r:
        raise ValueError("chart dimension does not match sample table")
    r1max = r2max = 0.0
    pairs = 0
    for i, g in enumerate(sb.points):
        for j, h in enumerate(sb.points):
            ij = sb.lookup(chart.mul(g, h))
            ji = sb.lookup(chart.mul(h, g))
            if ij is None or ji is None:
                continue
            sg, sh, sgh = sb.s_mats[i], sb.s_mats[j], sb.s_mats[ij]
            tg, th, thg = sb.t_mats[i], sb.t_mats[j], sb.t_mats[ji]
            r1 = frobenius_norm(tg @ sg @ sh - sgh @ tg)
            r2 = frobenius_norm(sg @ tg @ th - thg @ sg)
            r1max = max(r1max, r1)
            r2max = max(r2max, r2)
            pairs += 1
    return r1max, r2max, pairs
