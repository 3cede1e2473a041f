"""Exact arithmetic core: rationals, quadratic irrationals, polynomials,
Sturm root counting, and symmetric-matrix inertia."""

from .linalg import (
    Matrix,
    Signature,
    bareiss_det,
    char_poly,
    identity,
    is_symmetric,
    leading_principal_minors,
    mat,
    mat_add,
    mat_eq,
    mat_mul,
    mat_sub,
    mat_vec,
    matrix_rank,
    nullspace,
    rref,
    signature_of,
    trace,
    transpose,
    try_int_matrix,
)
from .poly import (
    Interval,
    Poly,
    cauchy_root_bound,
    count_roots_above,
    isolate_real_roots,
    poly_gcd,
    refine_root_interval,
    squarefree_decomposition,
    squarefree_part,
    sturm_root_count,
    sturm_sequence,
)
from .quadratic import QuadElem, Rat, is_squarefree, quad_sign

__all__ = [
    "Interval",
    "Matrix",
    "Poly",
    "QuadElem",
    "Rat",
    "Signature",
    "bareiss_det",
    "cauchy_root_bound",
    "char_poly",
    "count_roots_above",
    "identity",
    "is_squarefree",
    "is_symmetric",
    "isolate_real_roots",
    "leading_principal_minors",
    "mat",
    "mat_add",
    "mat_eq",
    "mat_mul",
    "mat_sub",
    "mat_vec",
    "matrix_rank",
    "nullspace",
    "poly_gcd",
    "quad_sign",
    "refine_root_interval",
    "rref",
    "signature_of",
    "squarefree_decomposition",
    "squarefree_part",
    "sturm_root_count",
    "sturm_sequence",
    "trace",
    "transpose",
    "try_int_matrix",
]
