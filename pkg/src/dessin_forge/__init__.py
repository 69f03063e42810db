"""Shabat polynomials and monodromy groups of two-tree passports."""

from .algebra import FieldElement, Poly
from .dessins import Dessin, Passport, Permutation, count_trees, enumerate_trees
from .families import ShabatPair, build
from .monodromy import GroupReport, PermGroup, structure_check
from .verify import equivalent, is_shabat, passport_from_poly

__version__ = "0.1.0"

__all__ = [
    "Dessin",
    "FieldElement",
    "GroupReport",
    "Passport",
    "PermGroup",
    "Permutation",
    "Poly",
    "ShabatPair",
    "build",
    "count_trees",
    "enumerate_trees",
    "equivalent",
    "is_shabat",
    "passport_from_poly",
    "structure_check",
]
