"""Dense linear-algebra kernels: pivoted LU solves and numeric rank."""

from __future__ import annotations

import numpy as np

PIVOT_RTOL = 1e-12
RANK_RTOL = 1e-8


class SingularMatrixError(ValueError):
    """A pivot fell below the singularity threshold during elimination."""


def frobenius_norm(a) -> float:
    return float(np.linalg.norm(np.asarray(a, dtype=float)))


def mat_mul(a, b) -> np.ndarray:
    return np.asarray(a, dtype=float) @ np.asarray(b, dtype=float)


def commutator(a, b) -> np.ndarray:
    """[A, B] = AB - BA."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return a @ b - b @ a


def _plu(a):
    """Partially pivoted LU; raises when a pivot drops below PIVOT_RTOL * ||A||."""
    lu = np.array(a, dtype=float)
    n, m = lu.shape
    if n != m:
        raise ValueError("matrix must be square")
    scale = frobenius_norm(lu)
    perm = np.arange(n)
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        if abs(lu[p, k]) <= PIVOT_RTOL * scale:
            raise SingularMatrixError(
                f"pivot {abs(lu[p, k]):.3e} below {PIVOT_RTOL:.0e} * ||A||"
            )
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            perm[[k, p]] = perm[[p, k]]
        lu[k + 1 :, k] /= lu[k, k]
        lu[k + 1 :, k + 1 :] -= np.outer(lu[k + 1 :, k], lu[k, k + 1 :])
    return lu, perm


def solve_linear(a, b) -> np.ndarray:
    """Solve Ax = b by partially pivoted elimination; b may be a vector or matrix."""
    lu, perm = _plu(a)
    n = lu.shape[0]
    rhs = np.asarray(b, dtype=float)
    vector = rhs.ndim == 1
    x = rhs.reshape(n, -1)[perm].astype(float)
    for k in range(n):
        x[k + 1 :] -= np.outer(lu[k + 1 :, k], x[k])
    for k in range(n - 1, -1, -1):
        x[k] -= lu[k, k + 1 :] @ x[k + 1 :]
        x[k] /= lu[k, k]
    return x[:, 0] if vector else x


def mat_inv(a) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    return solve_linear(a, np.eye(a.shape[0]))


def numeric_rank(vectors, tol: float = RANK_RTOL) -> int:
    """Pivot count of column-pivoted elimination on the stacked vectors.

    A pivot counts while its magnitude exceeds tol times the largest initial
    column norm.
    """
    vecs = [np.asarray(v, dtype=float).ravel() for v in vectors]
    if not vecs:
        return 0
    m = np.column_stack(vecs)
    thresh = tol * float(np.linalg.norm(m, axis=0).max())
    if thresh == 0.0:
        return 0
    work = m.copy()
    rank = 0
    for _ in range(min(work.shape)):
        norms = np.linalg.norm(work, axis=0)
        p = int(np.argmax(norms))
        if norms[p] <= thresh:
            break
        q = work[:, p] / norms[p]
        work -= np.outer(q, q @ work)
        rank += 1
    return rank
