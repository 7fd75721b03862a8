"""Generators, derivative generators and the commutation-relation residuals.

The generalized Lie equations relate the coordinate derivatives of the
birepresentation matrices to the derivative generators; their integrability
conditions are the generalized Lie-Cartan commutation relations.  For
associative birepresentations both collapse to the classical Lie-Cartan
relations, which is what the `classical_residuals` check measures.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .jets import JetDiffer
from .linalg import commutator, frobenius_norm, mat_inv
from .loops import LoopChart
from .malcev import StructureTensor, auxiliary_matrix

_JET = JetDiffer()


@dataclass(frozen=True)
class GeneratorSet:
    """S_j, T_j: coordinate derivatives of the maps at the identity."""

    S: tuple
    T: tuple


@dataclass(frozen=True)
class DerivativeGenerators:
    """S_j(g) = T_g S_j T_g^{-1} and T_j(g) = S_g^{-1} T_j S_g."""

    at: np.ndarray
    S: tuple
    T: tuple


def _flat(matrix_map, n):
    def f(coords):
        return [entry for row in matrix_map(coords) for entry in row]

    return f


def generators(b, differ=_JET) -> GeneratorSet:
    r, n = b.r, b.n
    e = np.zeros(r)
    fs = _flat(b.s_map, n)
    ft = _flat(b.t_map, n)
    s_gen, t_gen = [], []
    for j in range(r):
        u = np.zeros(r)
        u[j] = 1.0
        _, ds = differ.directional(fs, e, u)
        _, dt = differ.directional(ft, e, u)
        s_gen.append(ds.reshape(n, n))
        t_gen.append(dt.reshape(n, n))
    return GeneratorSet(tuple(s_gen), tuple(t_gen))


def derivative_generators(b, gen: GeneratorSet, g) -> DerivativeGenerators:
    sg = b.S(g)
    tg = b.T(g)
    sg_inv = mat_inv(sg)
    tg_inv = mat_inv(tg)
    s_der = tuple(tg @ sj @ tg_inv for sj in gen.S)
    t_der = tuple(sg_inv @ tj @ sg for tj in gen.T)
    return DerivativeGenerators(np.asarray(g, dtype=float), s_der, t_der)


def sum_identity_residual(gen: GeneratorSet, dgen: DerivativeGenerators) -> float:
    """max_j || S_j(g) + T_j(g) - S_j - T_j ||."""
    return max(
        frobenius_norm(sjg + tjg - sj - tj)
        for sjg, tjg, sj, tj in zip(dgen.S, dgen.T, gen.S, gen.T)
    )


def gle_residuals(b, chart: LoopChart, gen: GeneratorSet, g, differ=_JET):
    """Residuals of the generalized Lie equations at g, in both displayed forms.

    Returns (S conjugated, S associator, T conjugated, T associator), each the
    max over coordinate directions of the Frobenius norm of
    v_j^n(g) dX/dg^n minus the corresponding right-hand side.
    """
    r, n = b.r, b.n
    g = np.asarray(g, dtype=float)
    v = auxiliary_matrix(chart, g, differ)
    dgen = derivative_generators(b, gen, g)
    fs = _flat(b.s_map, n)
    ft = _flat(b.t_map, n)
    sg = b.S(g)
    tg = b.T(g)
    rs_conj = rs_assoc = rt_conj = rt_assoc = 0.0
    for j in range(r):
        u = v[:, j]
        _, ds = differ.directional(fs, g, u)
        _, dt = differ.directional(ft, g, u)
        lhs_s = ds.reshape(n, n)
        lhs_t = dt.reshape(n, n)
        rs_conj = max(rs_conj, frobenius_norm(lhs_s - sg @ dgen.S[j]))
        rs_assoc = max(rs_assoc, frobenius_norm(lhs_s - sg @ gen.S[j] - commutator(sg, gen.T[j])))
        rt_conj = max(rt_conj, frobenius_norm(lhs_t - dgen.T[j] @ tg))
        rt_assoc = max(rt_assoc, frobenius_norm(lhs_t - gen.T[j] @ tg - commutator(gen.S[j], tg)))
    return rs_conj, rs_assoc, rt_conj, rt_assoc


def gle_forms_residual(b, gen: GeneratorSet, dgen: DerivativeGenerators, g) -> float:
    """Agreement of the two displayed right-hand sides, no derivatives involved."""
    sg = b.S(g)
    tg = b.T(g)
    res = 0.0
    for j, (sjg, tjg) in enumerate(zip(dgen.S, dgen.T)):
        res = max(res, frobenius_norm(sg @ sjg - sg @ gen.S[j] - commutator(sg, gen.T[j])))
        res = max(res, frobenius_norm(tjg @ tg - gen.T[j] @ tg - commutator(gen.S[j], tg)))
    return res


def lie_cartan_residuals(dgen: DerivativeGenerators, cg: StructureTensor) -> tuple[float, float]:
    """Generalized Lie-Cartan commutation-relation residuals at the base point.

    [S_j(g), S_k(g)] = c^n_jk(g) S_n(g) - 2 [S_j(g), T_k(g)]
    [T_j(g), T_k(g)] = -c^n_jk(g) T_n(g) - 2 [T_j(g), S_k(g)]
    """
    r = cg.r
    s_stack = np.stack(dgen.S)
    t_stack = np.stack(dgen.T)
    rs = rt = 0.0
    for j in range(r):
        for k in range(r):
            c_jk = cg.tensor[:, j, k]
            lhs_s = commutator(dgen.S[j], dgen.S[k])
            rhs_s = np.einsum("n,nab->ab", c_jk, s_stack) - 2.0 * commutator(dgen.S[j], dgen.T[k])
            rs = max(rs, frobenius_norm(lhs_s - rhs_s))
            lhs_t = commutator(dgen.T[j], dgen.T[k])
            rhs_t = -np.einsum("n,nab->ab", c_jk, t_stack) - 2.0 * commutator(dgen.T[j], dgen.S[k])
            rt = max(rt, frobenius_norm(lhs_t - rhs_t))
    return rs, rt


def classical_residuals(gen: GeneratorSet, c: StructureTensor):
    """Classical Lie-Cartan residuals; all three vanish for associative birepresentations.

    Returns per-pair residual lists for ([S_j,S_k] - c^n_jk S_n,
    [T_j,T_k] + c^n_jk T_n, [S_j,T_k]).
    """
    r = c.r
    s_stack = np.stack(gen.S)
    t_stack = np.stack(gen.T)
    res_ss, res_tt, res_st = [], [], []
    for j in range(r):
        for k in range(r):
            c_jk = c.tensor[:, j, k]
            res_ss.append(
                frobenius_norm(commutator(gen.S[j], gen.S[k]) - np.einsum("n,nab->ab", c_jk, s_stack))
            )
            res_tt.append(
                frobenius_norm(commutator(gen.T[j], gen.T[k]) + np.einsum("n,nab->ab", c_jk, t_stack))
            )
            res_st.append(frobenius_norm(commutator(gen.S[j], gen.T[k])))
    return res_ss, res_tt, res_st
