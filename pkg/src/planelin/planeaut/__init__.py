"""Polynomial automorphisms of the plane and their van der Kulk normal form."""

from planelin.planeaut.automorphism import (
    AffineAut,
    AutKind,
    ElementaryAut,
    PolyAut,
    compose,
    compose_all,
    degree,
    differential_at_origin,
    fixes_origin,
    membership,
    tau_polyaut,
)
from planelin.planeaut.vdk import (
    VdkWord,
    affine_coset_matrix,
    factorize,
    inverse,
    vdk_amalgam,
    vdk_factorize,
)

__all__ = [
    "AffineAut",
    "AutKind",
    "ElementaryAut",
    "PolyAut",
    "VdkWord",
    "affine_coset_matrix",
    "compose",
    "compose_all",
    "degree",
    "differential_at_origin",
    "factorize",
    "fixes_origin",
    "inverse",
    "membership",
    "tau_polyaut",
    "vdk_amalgam",
    "vdk_factorize",
]
