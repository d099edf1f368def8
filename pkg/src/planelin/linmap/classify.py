"""Reducibility, unipotence and quasi-orders of 2x2 matrices.

Quasi-orders are found by testing powers, never by extracting eigenvalues.
Over the rationals a quasi-unipotent 2x2 matrix has quasi-order in
``{1, 2, 3, 4, 6}``; over ``F_p`` the quasi-order divides ``p^2 - 1``.
"""

from __future__ import annotations

import logging

import sympy

from planelin.errors import SingularMatrix
from planelin.exactalg import FieldSpec, Mat2
from planelin.linmap.models import Classification, Hypothesis, HypothesisVerdict
from planelin.linmap.subgroup import SubgroupSpec

logger = logging.getLogger(__name__)

RATIONAL_QUASI_ORDERS = (1, 2, 3, 4, 6)


def is_unipotent(m: Mat2) -> bool:
    """``tr = 2`` and ``det = 1``; for 2x2 matrices this forces ``(m - id)^2 = 0``."""
    return m.trace == m.field.reduce(2) and m.determinant == 1


def is_k_reducible(m: Mat2) -> bool:
    """Whether the characteristic polynomial splits over the base field."""
    field = m.field
    tr, det = m.trace, m.determinant
    if not field.is_rational and field.p == 2:
        return any(field.reduce(x * x - tr * x + det) == 0 for x in (0, 1))
    return field.is_square(field.reduce(tr * tr - 4 * det))


def _candidate_orders(field: FieldSpec) -> list[int]:
    if field.is_rational:
        return list(RATIONAL_QUASI_ORDERS)
    return [int(n) for n in sympy.divisors(field.p**2 - 1)]


def quasi_order(m: Mat2) -> int | None:
    """The smallest ``n > 0`` with ``m^n`` unipotent, or ``None``."""
    for n in _candidate_orders(m.field):
        if is_unipotent(m**n):
            return n
    return None


def classify(m: Mat2) -> Classification:
    if m.determinant == 0:
        raise SingularMatrix(f"Cannot classify the singular matrix {m}")
    order = quasi_order(m)
    return Classification(
        k_reducible=is_k_reducible(m),
        unipotent=is_unipotent(m),
        quasi_unipotent=order is not None,
        quasi_order=order,
    )


def quasi_order_bound(subgroup: SubgroupSpec) -> int:
    """A common multiple ``N`` of every quasi-order that can occur in ``S``."""
    field = subgroup.field
    return 12 if field.is_rational else field.p**2 - 1


def _check_hypothesis(
    subgroup: SubgroupSpec, word_bound: int, hypothesis: Hypothesis
) -> HypothesisVerdict:
    elements = subgroup.elements(word_bound)
    for m, word in elements.items():
        if not is_k_reducible(m):
            continue
        bad = (
            not is_unipotent(m)
            if hypothesis is Hypothesis.UNIPOTENT
            else quasi_order(m) is None
        )
        if bad:
            logger.info("hypothesis %s fails at %s", hypothesis.value, m)
            return HypothesisVerdict(
                hypothesis=hypothesis,
                word_bound=word_bound,
                elements_checked=len(elements),
                counterexample=str(m),
                word=SubgroupSpec.format_word(word),
            )
    return HypothesisVerdict(
        hypothesis=hypothesis, word_bound=word_bound, elements_checked=len(elements)
    )


def check_hypothesis_U(subgroup: SubgroupSpec, word_bound: int) -> HypothesisVerdict:  # noqa: N802
    """Search for a reducible element of ``S`` that is not unipotent."""
    return _check_hypothesis(subgroup, word_bound, Hypothesis.UNIPOTENT)


def check_hypothesis_QU(subgroup: SubgroupSpec, word_bound: int) -> HypothesisVerdict:  # noqa: N802
    """Search for a reducible element of ``S`` that is not quasi-unipotent."""
    return _check_hypothesis(subgroup, word_bound, Hypothesis.QUASI_UNIPOTENT)
