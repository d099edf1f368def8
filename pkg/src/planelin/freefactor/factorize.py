"""Free factorization of ``Aut_1 K^2`` into the groups ``F_delta``."""

from __future__ import annotations

import logging

from planelin.errors import InternalAssertion, NotInAut1
from planelin.exactalg import Mat2, ProjPoint
from planelin.freefactor.tau import TauFactor, TauWord, conjugate_tau
from planelin.planeaut import AffineAut, PolyAut, vdk_factorize

logger = logging.getLogger(__name__)


def free_factorize(phi: PolyAut) -> TauWord:
    """Rewrite ``phi`` (fixing the origin, identity differential) as a tau word.

    The van der Kulk word alternates linear coset representatives ``M_i`` and
    shears ``tau_(0:1)(h_i)``. Pushing the linear parts to the left turns every
    shear into its conjugate by the running product ``L = M_1 ... M_i``.
    """
    field = phi.field
    if not phi.fixes_origin:
        raise NotInAut1(f"{phi} does not fix the origin")
    if not phi.differential_at_origin().is_identity:
        raise NotInAut1(f"Differential of {phi} at the origin is not the identity")

    word = vdk_factorize(phi.f, phi.g)
    origin_line = ProjPoint.of(field, 0, 1)
    running = Mat2.identity(field)
    factors: list[TauFactor] = []
    for rep in word.factors:
        if isinstance(rep, AffineAut):
            running = running * rep.linear
            continue
        shear = TauFactor(origin_line, rep.f)
        factors.append(conjugate_tau(running, shear))

    running = running * word.tail.linear
    if not running.is_identity or any(v != 0 for v in word.tail.translation):
        raise InternalAssertion(f"Linear parts multiply to {running}, not the identity")
    result = TauWord.of(field, factors)
    logger.debug("free factorization of length %d", result.length)
    return result
