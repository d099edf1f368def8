"""Bounded check of the subamalgam intersection condition ``G1' ∩ A = G2' ∩ A``."""

from __future__ import annotations

import logging
from collections.abc import Callable, Hashable, Sequence
from typing import TypeVar

from planelin.amalgam.engine import AmalgamSpec, Side
from planelin.amalgam.models import SubamalgamReport, SubamalgamViolation
from planelin.errors import SpecViolation

logger = logging.getLogger(__name__)

G = TypeVar("G")


def enumerate_subgroup(
    gens: Sequence[G], spec: AmalgamSpec[G], bound: int
) -> dict[Hashable, tuple[G, list[str]]]:
    """Distinct elements of ``<gens>`` reachable by words of length ``<= bound``.

    Returns ``{key: (element, letters)}`` where the letters ``g<i>`` and
    ``g<i>^-1`` name the generators used.
    """
    letters: list[tuple[str, G]] = []
    for i, g in enumerate(gens):
        letters.append((f"g{i}", g))
        letters.append((f"g{i}^-1", spec.invert(g)))
    seen: dict[Hashable, tuple[G, list[str]]] = {spec.key(spec.identity): (spec.identity, [])}
    frontier: list[tuple[G, list[str]]] = [(spec.identity, [])]
    for depth in range(bound):
        nxt: list[tuple[G, list[str]]] = []
        for element, word in frontier:
            for name, g in letters:
                product = spec.multiply(element, g)
                key = spec.key(product)
                if key in seen:
                    continue
                entry = (product, [*word, name])
                seen[key] = entry
                nxt.append(entry)
        logger.debug("%s: depth %d reached %d elements", spec.name, depth + 1, len(seen))
        frontier = nxt
        if not frontier:
            break
    return seen


def _check_side(gens: Sequence[G], spec: AmalgamSpec[G], side: Side) -> None:
    for g in gens:
        if not spec.in_a(g) and Side(spec.side_of(g)) is not side:
            raise SpecViolation(f"Generator of G{int(side)}' lies outside G{int(side)}")


def subamalgam_check(
    gens1: Sequence[G],
    gens2: Sequence[G],
    spec: AmalgamSpec[G],
    bound: int,
    describe: Callable[[G], str] = str,
) -> SubamalgamReport:
    """Compare the ``A``-parts of two subgroups on all words up to ``bound``."""
    _check_side(gens1, spec, Side.ONE)
    _check_side(gens2, spec, Side.TWO)
    found = [enumerate_subgroup(gens, spec, bound) for gens in (gens1, gens2)]
    in_a = [
        {k: v for k, v in elements.items() if spec.in_a(v[0])} for elements in found
    ]
    violations: list[SubamalgamViolation] = []
    for side, (mine, theirs) in enumerate(((in_a[0], in_a[1]), (in_a[1], in_a[0])), start=1):
        for key, (element, word) in mine.items():
            if key not in theirs:
                violations.append(
                    SubamalgamViolation(found_in=side, element=describe(element), word=word)
                )
    if violations:
        logger.warning("%s: %d subamalgam violations up to %d", spec.name, len(violations), bound)
    return SubamalgamReport(
        bound=bound,
        enumerated=(len(found[0]), len(found[1])),
        in_a=(len(in_a[0]), len(in_a[1])),
        violations=violations,
    )
