"""Amalgamated products: reduced words, conjugation into corners, subamalgams."""

from planelin.amalgam.conjugation import Conjugation, Corner, conjugate_to_type
from planelin.amalgam.engine import AmalgamSpec, ReducedWord, Side, reduce, reduced_inverse
from planelin.amalgam.models import SubamalgamReport, SubamalgamViolation
from planelin.amalgam.subamalgam import enumerate_subgroup, subamalgam_check

__all__ = [
    "AmalgamSpec",
    "Conjugation",
    "Corner",
    "ReducedWord",
    "Side",
    "SubamalgamReport",
    "SubamalgamViolation",
    "conjugate_to_type",
    "enumerate_subgroup",
    "reduce",
    "reduced_inverse",
    "subamalgam_check",
]
