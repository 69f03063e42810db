"""Exact arithmetic: quadratic fields and univariate polynomials over them."""

from .field import FieldElement, FieldMismatchError, rational_sqrt, squarefree_part
from .poly import (
    Poly,
    arith,
    bivariate_resultant_in_y,
    derivative,
    galois_conjugate,
    gcd,
    resultant,
    squarefree_decomposition,
    sylvester_resultant,
)
from .io import poly_from_json, poly_to_json, load_poly, dump_poly

__all__ = [
    "FieldElement",
    "FieldMismatchError",
    "Poly",
    "arith",
    "bivariate_resultant_in_y",
    "derivative",
    "dump_poly",
    "galois_conjugate",
    "gcd",
    "load_poly",
    "poly_from_json",
    "poly_to_json",
    "rational_sqrt",
    "resultant",
    "squarefree_decomposition",
    "squarefree_part",
    "sylvester_resultant",
]
