"""The representation ``rho_S: Aut_S K^2 -> GL_S(2, K[t])``.

``Aut_S`` consists of the automorphisms fixing the origin whose differential
lies in ``S``. Write ``phi = D o alpha`` with ``D`` the differential and
``alpha`` in ``Aut_1``. A tau factor ``u`` on the line ``delta`` is sent to
``g psi(g^-1 u g) g^-1`` where ``g`` carries the orbit representative of
``delta`` to ``delta``; ``rho_S(phi)`` is ``D`` times the product of these.
"""

from __future__ import annotations

import logging
from collections.abc import Callable

from planelin.errors import NotInAut1, NotInSubgroup
from planelin.exactalg import Mat2, MatPoly2
from planelin.freefactor import TauFactor, conjugate_tau, free_factorize
from planelin.linmap.psi import psi_factor
from planelin.linmap.sections import OrbitSection, check_section
from planelin.planeaut import PolyAut, compose

logger = logging.getLogger(__name__)

DEFAULT_WORD_BOUND = 6


def rho_factor(factor: TauFactor, section: OrbitSection) -> MatPoly2:
    """Image of a single tau factor through the orbit representative of its line."""
    check_section(section, factor.delta)
    carrier = section.carrier(factor.delta)
    moved = conjugate_tau(carrier.inverse(), factor)
    return carrier * psi_factor(moved) * carrier.inverse()


def rho_S(  # noqa: N802
    phi: PolyAut,
    section: OrbitSection,
    contains: Callable[[Mat2], bool] | None = None,
    word_bound: int = DEFAULT_WORD_BOUND,
) -> MatPoly2:
    """Image of ``phi`` in ``GL_S(2, K[t])``.

    ``contains`` decides membership of the differential in ``S``; by default
    a word for it is searched up to ``word_bound``.

    Raises:
        NotInAut1: ``phi`` moves the origin.
        NotInSubgroup: the differential was not found in ``S``.
        SectionInconsistency: the section failed its runtime check on a line.
    """
    if not phi.fixes_origin:
        raise NotInAut1(f"{phi} does not fix the origin")
    subgroup = section.subgroup
    d = phi.differential_at_origin()
    found = contains(d) if contains is not None else subgroup.express(d, word_bound) is not None
    if not found:
        raise NotInSubgroup(f"Differential {d} is not in the subgroup")

    alpha = compose(PolyAut.from_linear(d.inverse()), phi)
    word = free_factorize(alpha)
    result = MatPoly2.constant(d)
    for factor in word.factors:
        result = result * rho_factor(factor, section)
    logger.debug("rho_S over %d factors, degree %d", word.length, result.degree)
    return result
