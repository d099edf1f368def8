"""Induction of ``rho_{S'}`` from a finite-index congruence subgroup to ``Aut_S``."""

from __future__ import annotations

import logging

from planelin.errors import CosetError
from planelin.exactalg import BlockMatPoly, Mat2, MatPoly2
from planelin.linmap.congruence import CongruenceSubgroup
from planelin.linmap.rho import rho_S
from planelin.linmap.sections import OrbitSection
from planelin.planeaut import PolyAut, compose

logger = logging.getLogger(__name__)


def induce_representation(
    phi: PolyAut, congruence: CongruenceSubgroup, section: OrbitSection
) -> BlockMatPoly:
    """Block ``(i, j)`` is ``rho_{S'}(r_i^-1 phi r_j)`` when that lies in ``Aut_{S'}``.

    ``section`` is an orbit section of ``S'``. Every block row holds exactly
    one nonzero block.

    Raises:
        CosetError: some row has no block, or more than one, in ``Aut_{S'}``.
    """
    field = phi.field
    d = phi.differential_at_origin()
    reps = congruence.coset_reps
    zero = MatPoly2.constant(Mat2.zero(field))
    rows: list[tuple[MatPoly2, ...]] = []
    for i, left in enumerate(reps):
        left_inv = left.inverse()
        row: list[MatPoly2] = []
        hits = 0
        for right in reps:
            if not congruence.contains(left_inv * d * right):
                row.append(zero)
                continue
            hits += 1
            moved = compose(PolyAut.from_linear(left_inv), compose(phi, PolyAut.from_linear(right)))
            row.append(rho_S(moved, section, contains=congruence.contains))
        if hits != 1:
            raise CosetError(f"Block row {i} has {hits} blocks in the subgroup")
        rows.append(tuple(row))
    logger.debug("induced representation of size %d", 2 * len(reps))
    return BlockMatPoly(tuple(rows))
