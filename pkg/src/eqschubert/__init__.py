"""Exact Schubert calculus on Gr(k,n): classical, equivariant, quantum."""

from .equivariant import (
    FixedPoint,
    elr,
    elr_table,
    fixed_points,
    integrate,
    pairing,
    partition_of,
    point_of,
    restrict_schubert,
    restriction_table,
    tangent_weights,
)
from .errors import (
    CacheError,
    ContextError,
    DimensionMismatchError,
    ExpansionError,
    NonPolynomialError,
    TableSolveError,
)
from .grass import (
    GrassContext,
    Partition,
    add_box_shapes,
    default_d_max,
    dual,
    enumerate_classes,
    q_degree,
    quantum_chevalley_shape,
    remove_rim_hooks,
    to_grassmannian_permutation,
)
from .oracles import elr_factorial_schur, lr_tableau, quantum_lr_rimhook
from .polyring import (
    Polynomial,
    RationalExpression,
    expect_polynomial,
    express_in_T_differences,
    is_x_nonnegative,
    rational_add,
    rational_mul,
    rational_reduce,
    to_T_variables,
)
from .quantum import (
    QModuleElement,
    eq_chevalley,
    eq_table,
    eqlr,
    multiply,
    specialize_q0,
    specialize_x0,
    verify_algebra,
    verify_positivity,
)
from .version import __version__

__all__ = [
    "CacheError",
    "ContextError",
    "DimensionMismatchError",
    "ExpansionError",
    "FixedPoint",
    "GrassContext",
    "NonPolynomialError",
    "Partition",
    "Polynomial",
    "QModuleElement",
    "RationalExpression",
    "TableSolveError",
    "add_box_shapes",
    "default_d_max",
    "dual",
    "elr",
    "elr_factorial_schur",
    "elr_table",
    "enumerate_classes",
    "eq_chevalley",
    "eq_table",
    "eqlr",
    "expect_polynomial",
    "express_in_T_differences",
    "fixed_points",
    "integrate",
    "is_x_nonnegative",
    "lr_tableau",
    "multiply",
    "pairing",
    "partition_of",
    "point_of",
    "q_degree",
    "quantum_chevalley_shape",
    "quantum_lr_rimhook",
    "rational_add",
    "rational_mul",
    "rational_reduce",
    "remove_rim_hooks",
    "restrict_schubert",
    "restriction_table",
    "specialize_q0",
    "specialize_x0",
    "tangent_weights",
    "to_T_variables",
    "to_grassmannian_permutation",
    "verify_algebra",
    "verify_positivity",
    "__version__",
]
