"""Exact scalars, polynomials, rewrite normal forms and linear algebra."""

from .scalar import I, Scalar, as_scalar
from .poly import Poly, align, grlex_key, monomials_of_degree
from .rewrite import RewriteOrderError, RewriteSystem, normal_form
from .linalg import (
    IncrementalEchelon,
    determinant,
    exact_rank,
    is_positive_definite,
    is_nilpotent,
    leading_principal_minors,
    solve,
)


def differentiate(p: Poly, v: str) -> Poly:
    return p.differentiate(v)


__all__ = [
    "I",
    "Scalar",
    "as_scalar",
    "Poly",
    "align",
    "grlex_key",
    "monomials_of_degree",
    "RewriteOrderError",
    "RewriteSystem",
    "normal_form",
    "differentiate",
    "IncrementalEchelon",
    "determinant",
    "exact_rank",
    "is_positive_definite",
    "is_nilpotent",
    "leading_principal_minors",
    "solve",
]
