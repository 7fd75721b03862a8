"""Tangent algebra of a loop chart and its base-point deformations.

Structure constants come from the mixed second derivative of the loop
commutator map at the identity; structure functions at a general base point
come from the generalized Maurer-Cartan equations for the left-translation
Jacobian.  Both tensors are stored antisymmetrized in the lower index pair,
with the raw asymmetry kept as a numerical diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .jets import JetDiffer
from .linalg import solve_linear
from .loops import LoopChart, commutator_map

_JET = JetDiffer()


@dataclass(frozen=True)
class StructureTensor:
    """c[i][j][k] antisymmetric in (j, k); `at` is None for the identity tensor."""

    tensor: np.ndarray
    raw_asymmetry: float
    at: np.ndarray | None = None

    @property
    def r(self) -> int:
        return self.tensor.shape[0]


def _antisymmetrize(raw: np.ndarray) -> tuple[np.ndarray, float]:
    asym = float(np.max(np.abs(raw + raw.swapaxes(1, 2))))
    return 0.5 * (raw - raw.swapaxes(1, 2)), asym


def structure_constants(chart: LoopChart, differ=_JET) -> StructureTensor:
    """Mixed second partials of the commutator map at the identity."""
    r = chart.r

    def f(z):
        return commutator_map(chart, z[:r], z[r:])

    zero = np.zeros(2 * r)
    raw = np.empty((r, r, r))
    for j in range(r):
        u = np.zeros(2 * r)
        u[j] = 1.0
        for k in range(r):
            v = np.zeros(2 * r)
            v[r + k] = 1.0
            _, _, _, dudv = differ.mixed(f, zero, u, v)
            raw[:, j, k] = dudv
    tensor, asym = _antisymmetrize(raw)
    return StructureTensor(tensor, asym)


def bracket(tensor: np.ndarray, x, y) -> np.ndarray:
    """[x, y]^i = c^i_jk x^j y^k."""
    return np.einsum("ijk,j,k->i", tensor, x, y)


def jacobiator(tensor: np.ndarray, x, y, z) -> np.ndarray:
    """J(x,y,z) = [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; zero exactly for Lie algebras."""
    return (
        bracket(tensor, x, bracket(tensor, y, z))
        + bracket(tensor, y, bracket(tensor, z, x))
        + bracket(tensor, z, bracket(tensor, x, y))
    )


def malcev_residual(tensor: np.ndarray, x, y, z) -> float:
    """|| [J(x,y,z), x] - J(x, y, [x,z]) ||."""
    lhs = bracket(tensor, jacobiator(tensor, x, y, z), x)
    rhs = jacobiator(tensor, x, y, bracket(tensor, x, z))
    return float(np.linalg.norm(lhs - rhs))


def auxiliary_matrix(chart: LoopChart, g, differ=_JET) -> np.ndarray:
    """Left-translation Jacobian V[n][j] = d(g h)^n / d h^j at h = identity."""
    r = chart.r
    e = np.zeros(r)
    v = np.empty((r, r))
    for j in range(r):
        u = np.zeros(r)
        u[j] = 1.0
        _, col = differ.directional(lambda h: chart.mul(g, h), e, u)
        v[:, j] = col
    return v


def structure_functions(chart: LoopChart, g, differ=_JET) -> StructureTensor:
    """Base-point tensor solving the generalized Maurer-Cartan equations.

    The left side v_j^n d_n v_k^i - v_k^n d_n v_j^i is assembled from mixed
    second derivatives of the multiplication map; each (j, k) slice is then
    solved against the matrix M[i][n] = v_n^i(g) with one shared factorization.
    """
    r = chart.r
    g = np.asarray(g, dtype=float)

    def f(z):
        return chart.mul(z[:r], z[r:])

    z0 = np.concatenate([g, np.zeros(r)])
    v = np.empty((r, r))
    w = np.empty((r, r, r))
    for n in range(r):
        u = np.zeros(2 * r)
        u[n] = 1.0
        for k in range(r):
            vv = np.zeros(2 * r)
            vv[r + k] = 1.0
            _, _, dv, dudv = differ.mixed(f, z0, u, vv)
            w[n, k] = dudv
            if n == 0:
                v[:, k] = dv
    lhs = np.einsum("nj,nki->jki", v, w) - np.einsum("nk,nji->jki", v, w)
    cg = solve_linear(v, lhs.reshape(r * r, r).T).reshape(r, r, r)
    tensor, asym = _antisymmetrize(cg)
    return StructureTensor(tensor, asym, at=g)


def tensor_entries(tensor: np.ndarray, zero_tol: float = 1e-12) -> list[dict]:
    """Nonzero tensor entries with 1-based indices, ordered by (i, j, k)."""
    r = tensor.shape[0]
    entries = []
    for i in range(r):
        for j in range(r):
            for k in range(r):
                val = float(tensor[i, j, k])
                if abs(val) > zero_tol:
                    entries.append({"i": i + 1, "j": j + 1, "k": k + 1, "value": val})
    return entries


def tensor_to_json_dict(tensor: np.ndarray) -> dict:
    return {"r": int(tensor.shape[0]), "entries": tensor_entries(tensor)}
