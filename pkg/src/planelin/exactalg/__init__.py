"""Exact arithmetic over Q and F_p: scalars, polynomials, 2x2 matrices, P^1."""

from planelin.exactalg.bipoly import BiPoly, bipoly_subst, compose_univariate
from planelin.exactalg.field import QQ, FieldKind, FieldSpec, Raw, Scalar
from planelin.exactalg.grammar import (
    format_automorphism,
    format_bipoly,
    format_mat2,
    format_matpoly,
    format_scalar,
    format_unipoly,
    parse_automorphism,
    parse_bipoly,
    parse_mat2,
    parse_matpoly,
    parse_point,
    parse_scalar,
    parse_unipoly,
)
from planelin.exactalg.matrix import (
    BlockMatPoly,
    Mat2,
    MatPoly2,
    Vector,
    mat_det,
    mat_inv,
    mat_mul,
    matpoly_eval0,
    matpoly_mul,
)
from planelin.exactalg.projective import ProjPoint, e_delta, in_e_space
from planelin.exactalg.unipoly import ZERO_DEGREE, UniPoly, poly_compose

__all__ = [
    "QQ",
    "ZERO_DEGREE",
    "BiPoly",
    "BlockMatPoly",
    "FieldKind",
    "FieldSpec",
    "Mat2",
    "MatPoly2",
    "ProjPoint",
    "Raw",
    "Scalar",
    "UniPoly",
    "Vector",
    "bipoly_subst",
    "compose_univariate",
    "e_delta",
    "format_automorphism",
    "format_bipoly",
    "format_mat2",
    "format_matpoly",
    "format_scalar",
    "format_unipoly",
    "in_e_space",
    "mat_det",
    "mat_inv",
    "mat_mul",
    "matpoly_eval0",
    "matpoly_mul",
    "parse_automorphism",
    "parse_bipoly",
    "parse_mat2",
    "parse_matpoly",
    "parse_point",
    "parse_scalar",
    "parse_unipoly",
    "poly_compose",
]
