"""Conjugating elements of ``B`` out of ``B``.

Every nontrivial element of the subgroup of invertible lower-triangular
linear maps has a conjugate outside it: homotheties are moved by the shear
``T = (x, y + x^2)``, everything else by a linear map. The same witnesses
serve as the ``h_witness`` hook of
:func:`~planelin.amalgam.conjugate_to_type` for the van der Kulk amalgam.
"""

from __future__ import annotations

import logging
from itertools import product

from planelin.errors import InternalAssertion, IsIdentity, NotInB0
from planelin.exactalg import FieldSpec, Mat2, UniPoly
from planelin.planeaut import AutKind, ElementaryAut, PolyAut, compose_all, inverse, membership

logger = logging.getLogger(__name__)


def _conjugate(gamma: PolyAut, phi: PolyAut) -> PolyAut:
    """``gamma phi gamma^-1``."""
    return compose_all([gamma, phi, inverse(gamma)])


def _shear(field: FieldSpec, k: int) -> PolyAut:
    return ElementaryAut.shear(UniPoly.monomial(field, 1, k)).to_polyaut()


def _linear_candidates(field: FieldSpec) -> list[PolyAut]:
    return [PolyAut.flip(field), PolyAut.from_linear(Mat2(1, 1, 0, 1, field))]


def hypothesis_H_witness(g: Mat2) -> PolyAut:  # noqa: N802
    """Return ``gamma`` with ``gamma g gamma^-1`` outside ``B0``.

    Args:
        g: An invertible lower-triangular matrix.

    Raises:
        NotInB0: ``g`` is singular or not lower triangular.
        IsIdentity: ``g`` is the identity.
    """
    field = g.field
    if not g.is_lower_triangular or g.determinant == 0:
        raise NotInB0(f"{g} is not an invertible lower-triangular matrix")
    if g.is_identity:
        raise IsIdentity("The identity is conjugate only to itself")
    phi = PolyAut.from_linear(g)
    if g.is_scalar:
        # (lx, ly) becomes (lx, ly + (l^2 - l) x^2)
        return _shear(field, 2)
    for gamma in _linear_candidates(field):
        if not _conjugate(gamma, phi).differential_at_origin().is_lower_triangular:
            return gamma
    raise InternalAssertion(f"No linear witness for {g}")


def hypothesis_H_vdk_witness(phi: PolyAut) -> list[PolyAut]:  # noqa: N802
    """A word for ``gamma`` with ``gamma phi gamma^-1`` outside ``B``.

    Linear elements use :func:`hypothesis_H_witness`; elements with a
    translation part are tried against products of at most two of the flip,
    the unipotent ``[[1, 1], [0, 1]]`` and the shears by ``x^2 .. x^4``.

    Raises:
        NotInB0: ``phi`` is not in ``B``.
        IsIdentity: ``phi`` is the identity.
    """
    if membership(phi) is not AutKind.IN_B:
        raise NotInB0(f"{phi} is not in B")
    if phi.is_identity:
        raise IsIdentity("The identity is conjugate only to itself")
    if phi.fixes_origin:
        return [hypothesis_H_witness(phi.differential_at_origin())]
    field = phi.field
    pool = [*_linear_candidates(field), *(_shear(field, k) for k in (2, 3, 4))]
    for length in (1, 2):
        for word in product(pool, repeat=length):
            if membership(_conjugate(compose_all(list(word)), phi)) is not AutKind.IN_B:
                logger.debug("witness of length %d for %s", length, phi)
                return list(word)
    raise InternalAssertion(f"No witness found for {phi}")
