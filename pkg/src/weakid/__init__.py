"""Exact computation with weak polynomial identities of Clifford pairs."""

from .clifford import CliffordElt, FormParams, blade_mul, embed_vector, evaluate
from .freealg import (
    SQUARE_COMMUTATOR,
    NcPoly,
    commutator,
    jordan,
    multihomogeneous_components,
    multilinearize,
    standard_poly,
)
from .pairs import (
    CliffordPair,
    Mat2,
    MatrixPair,
    Witness,
    is_weak_identity,
    mat2_evaluate,
    substitution_basis,
)
from .parser import ParseError, format_expr, parse_poly
from .scalars import ParamPoly, param_specialize, rat_normalize
from .structure import (
    consequence_span_dim,
    corollary1_check,
    evaluation_kernel,
    factor_through_standard,
    hook_dim,
    in_consequence_span,
    involutions,
    lemma1_decompose,
    lemma2_coeffs,
    minimal_diagrams,
    partitions,
    theorem1_check,
)

__all__ = [
    "CliffordElt",
    "FormParams",
    "blade_mul",
    "embed_vector",
    "evaluate",
    "SQUARE_COMMUTATOR",
    "NcPoly",
    "commutator",
    "jordan",
    "multihomogeneous_components",
    "multilinearize",
    "standard_poly",
    "CliffordPair",
    "Mat2",
    "MatrixPair",
    "Witness",
    "is_weak_identity",
    "mat2_evaluate",
    "substitution_basis",
    "ParseError",
    "format_expr",
    "parse_poly",
    "ParamPoly",
    "param_specialize",
    "rat_normalize",
    "consequence_span_dim",
    "corollary1_check",
    "evaluation_kernel",
    "factor_through_standard",
    "hook_dim",
    "in_consequence_span",
    "involutions",
    "lemma1_decompose",
    "lemma2_coeffs",
    "minimal_diagrams",
    "partitions",
    "theorem1_check",
]
