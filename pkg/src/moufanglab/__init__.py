"""Numerical laboratory for analytic Moufang loops and their birepresentations.

The unit spheres of the complex, quaternion and octonion algebras are
instantiated as coordinatized loops; their tangent Mal'tsev algebras,
Maurer-Cartan structure functions, canonical left/right birepresentation,
generalized Lie and Lie-Cartan commutation relations, Yamagutian closure
algebra and its dimension bound are all verified numerically as residual
checks at seeded sample points.
"""

__version__ = "0.1.0"

from .cayley import CD, BasisTable, ZeroDivisorError, alternativity_residual, basis_table
from .jets import (
    DomainError,
    FdDiffer,
    Jet1,
    Jet2,
    JetDiffer,
    fd_directional,
    fd_mixed,
    jet1_eval,
    jet2_eval,
    jsqrt,
    make_differ,
)
from .linalg import (
    SingularMatrixError,
    commutator,
    frobenius_norm,
    mat_inv,
    mat_mul,
    numeric_rank,
    solve_linear,
)
from .loops import (
    ChartDomainError,
    LoopChart,
    NotUnitError,
    commutator_map,
    flexibility_residual,
    left_inverse_residual,
    moufang_residual,
)
from .malcev import (
    StructureTensor,
    auxiliary_matrix,
    bracket,
    jacobiator,
    malcev_residual,
    structure_constants,
    structure_functions,
)
from .birep import (
    Birepresentation,
    SampleBirep,
    associativity_residuals,
    birep_residuals,
    canonical_lr,
    load_sample_birep,
    sample_axiom_residuals,
)
from .liecartan import (
    DerivativeGenerators,
    GeneratorSet,
    classical_residuals,
    derivative_generators,
    generators,
    gle_forms_residual,
    gle_residuals,
    lie_cartan_residuals,
    sum_identity_residual,
)
from .yamaguti import (
    YamagutiContext,
    build_context,
    closure_dimension,
    closure_relations_residual,
    commutator_closure_residual,
    dimension_bound,
    reductivity_residual,
    yamagutian,
    yamagutian_constraints_residual,
    yamagutian_lie_residual,
    yamaguti_bracket,
)
from .report import CheckRecord, Report, make_record, report_to_json, report_to_table
from .suite import CHECK_NAMES, LOOP_LEVEL, RunConfig, run_suite
