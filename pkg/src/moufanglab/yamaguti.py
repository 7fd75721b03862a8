"""Yamagutian, ternary brackets and the closed Lie-algebra structure.

At a base point g the derivative generators and the structure-function
bracket combine into the Yamagutian, the operator whose span together with
the derivative generators closes under commutators.  The closure rank is
bounded by 2r + r(r-1)/2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .jets import JetDiffer
from .linalg import commutator, frobenius_norm, numeric_rank
from .liecartan import DerivativeGenerators, GeneratorSet, derivative_generators
from .loops import LoopChart
from .malcev import StructureTensor, bracket, jacobiator, structure_functions

_JET = JetDiffer()


@dataclass(frozen=True)
class YamagutiContext:
    """Derivative generators and structure functions anchored at one base point."""

    at: np.ndarray
    s_ops: np.ndarray
    t_ops: np.ndarray
    cg: StructureTensor

    @property
    def r(self) -> int:
        return self.s_ops.shape[0]

    @property
    def n(self) -> int:
        return self.s_ops.shape[1]

    def s_of(self, x) -> np.ndarray:
        """S_x(g) = x^j S_j(g)."""
        return np.einsum("j,jab->ab", np.asarray(x, dtype=float), self.s_ops)

    def t_of(self, x) -> np.ndarray:
        return np.einsum("j,jab->ab", np.asarray(x, dtype=float), self.t_ops)

    def bracket(self, x, y) -> np.ndarray:
        """[x, y]_g through the structure functions at the base point."""
        return bracket(self.cg.tensor, x, y)


def build_context(chart: LoopChart, b, gen: GeneratorSet, g, differ=_JET) -> YamagutiContext:
    dgen = derivative_generators(b, gen, g)
    cg = structure_functions(chart, g, differ)
    return YamagutiContext(dgen.at, np.stack(dgen.S), np.stack(dgen.T), cg)


def context_from_parts(dgen: DerivativeGenerators, cg: StructureTensor) -> YamagutiContext:
    return YamagutiContext(dgen.at, np.stack(dgen.S), np.stack(dgen.T), cg)


def yamagutian(ctx: YamagutiContext, x, y) -> np.ndarray:
    """Y_g(x;y) = ([S_x,S_y] + [S_x,T_y] + [T_x,T_y]) / 3 at the base point."""
    sx, sy = ctx.s_of(x), ctx.s_of(y)
    tx, ty = ctx.t_of(x), ctx.t_of(y)
    return (commutator(sx, sy) + commutator(sx, ty) + commutator(tx, ty)) / 3.0


def yamagutian_constraints_residual(ctx: YamagutiContext, x, y, z) -> tuple[float, float]:
    """Antisymmetry defect and cyclic defect of the Yamagutian."""
    anti = frobenius_norm(yamagutian(ctx, x, y) + yamagutian(ctx, y, x))
    cyc = frobenius_norm(
        yamagutian(ctx, ctx.bracket(x, y), z)
        + yamagutian(ctx, ctx.bracket(y, z), x)
        + yamagutian(ctx, ctx.bracket(z, x), y)
    )
    return anti, cyc


def yamaguti_bracket(cg: StructureTensor, x, y, z) -> tuple[np.ndarray, float]:
    """Ternary bracket [x,y,z]_g, plus the disagreement of its two displayed forms.

    Form one: [x,[y,z]] - [y,[x,z]] + [[x,y],z].
    Form two: J(x,y,z) + 2 [[x,y],z].
    """
    t = cg.tensor
    form1 = (
        bracket(t, x, bracket(t, y, z))
        - bracket(t, y, bracket(t, x, z))
        + bracket(t, bracket(t, x, y), z)
    )
    form2 = jacobiator(t, x, y, z) + 2.0 * bracket(t, bracket(t, x, y), z)
    return form1, float(np.linalg.norm(form1 - form2))


def closure_relations_residual(ctx: YamagutiContext, x, y) -> tuple[float, float, float]:
    """Residuals of the closed commutation relations for SS, ST and TT pairs."""
    sx, sy = ctx.s_of(x), ctx.s_of(y)
    tx, ty = ctx.t_of(x), ctx.t_of(y)
    yxy = yamagutian(ctx, x, y)
    br = ctx.bracket(x, y)
    s_br = ctx.s_of(br)
    t_br = ctx.t_of(br)
    r_ss = frobenius_norm(commutator(sx, sy) - (2.0 * yxy + s_br / 3.0 + 2.0 * t_br / 3.0))
    r_st = frobenius_norm(commutator(sx, ty) - (-yxy + s_br / 3.0 - t_br / 3.0))
    r_tt = frobenius_norm(commutator(tx, ty) - (2.0 * yxy - 2.0 * s_br / 3.0 - t_br / 3.0))
    return r_ss, r_st, r_tt


def reductivity_residual(ctx: YamagutiContext, x, y, z) -> tuple[float, float]:
    """Residuals of 6[Y(x;y), S_z] = S_[x,y,z] and 6[Y(x;y), T_z] = T_[x,y,z]."""
    yxy = yamagutian(ctx, x, y)
    w, _ = yamaguti_bracket(ctx.cg, x, y, z)
    r_s = frobenius_norm(6.0 * commutator(yxy, ctx.s_of(z)) - ctx.s_of(w))
    r_t = frobenius_norm(6.0 * commutator(yxy, ctx.t_of(z)) - ctx.t_of(w))
    return r_s, r_t


def yamagutian_lie_residual(ctx: YamagutiContext, x, y, z, w) -> float:
    """Residual of 6[Y(x;y), Y(z;w)] = Y([x,y,z];w) + Y(z;[x,y,w])."""
    lhs = 6.0 * commutator(yamagutian(ctx, x, y), yamagutian(ctx, z, w))
    bz, _ = yamaguti_bracket(ctx.cg, x, y, z)
    bw, _ = yamaguti_bracket(ctx.cg, x, y, w)
    rhs = yamagutian(ctx, bz, w) + yamagutian(ctx, z, bw)
    return frobenius_norm(lhs - rhs)


def operator_family(ctx: YamagutiContext) -> list[np.ndarray]:
    """S_j(g), T_j(g) and Y_g(e_a; e_b) for a < b; spans the closure algebra."""
    r = ctx.r
    fam = [ctx.s_ops[j] for j in range(r)] + [ctx.t_ops[j] for j in range(r)]
    eye = np.eye(r)
    for a in range(r):
        for b in range(a + 1, r):
            fam.append(yamagutian(ctx, eye[a], eye[b]))
    return fam


def closure_dimension(ctx: YamagutiContext, tol: float = 1e-8) -> int:
    """Numeric rank of the flattened operator family."""
    return numeric_rank([m.ravel() for m in operator_family(ctx)], tol)


def dimension_bound(r: int) -> int:
    return 2 * r + r * (r - 1) // 2


def commutator_closure_residual(ctx: YamagutiContext, tol: float = 1e-8) -> float:
    """Largest distance from span of any pairwise commutator of the family.

    Projection uses an orthonormal basis of the span obtained from the SVD;
    the family is rank-deficient by construction, so a least-squares
    projection is required rather than plain normal equations.
    """
    fam = operator_family(ctx)
    m = np.column_stack([f.ravel() for f in fam])
    u, s, _ = np.linalg.svd(m, full_matrices=False)
    keep = s > tol * s[0]
    basis = u[:, keep]
    worst = 0.0
    for i in range(len(fam)):
        for j in range(i + 1, len(fam)):
            c = commutator(fam[i], fam[j]).ravel()
            rem = c - basis @ (basis.T @ c)
            worst = max(worst, float(np.linalg.norm(rem)))
    return worst
