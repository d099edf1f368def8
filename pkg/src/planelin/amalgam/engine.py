"""Reduced words in an amalgamated product ``G1 *_A G2``.

The engine is generic over the ambient element type: an :class:`AmalgamSpec`
bundles the group law, the subgroup ``A`` and a fixed choice of left-coset
representatives. Every coset representative an AmalgamSpec hands back is checked
before it enters a word.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Hashable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import IntEnum
from functools import reduce as fold
from typing import Generic, TypeVar

from planelin.errors import SpecViolation

logger = logging.getLogger(__name__)

G = TypeVar("G")


class Side(IntEnum):
    """Which factor group a non-``A`` element belongs to."""

    ONE = 1
    TWO = 2

    @property
    def other(self) -> Side:
        return Side.TWO if self is Side.ONE else Side.ONE


@dataclass(frozen=True, slots=True)
class AmalgamSpec(Generic[G]):
    """Hooks describing one amalgam instance.

    ``coset_rep(g)`` must return ``(r, a)`` with ``g = r * a``, ``a`` in ``A``
    and ``r`` the fixed representative of the left coset ``gA``.
    ``samples`` lists a few non-``A`` elements of each side; they are the
    candidate conjugators of :func:`~planelin.amalgam.conjugation.conjugate_to_type`.
    """

    identity: G
    multiply: Callable[[G, G], G]
    invert: Callable[[G], G]
    equal: Callable[[G, G], bool]
    key: Callable[[G], Hashable]
    in_a: Callable[[G], bool]
    coset_rep: Callable[[G], tuple[G, G]]
    side_of: Callable[[G], Side]
    samples: Mapping[Side, Sequence[G]] = field(default_factory=dict)
    name: str = "amalgam"

    def product(self, elements: Iterable[G]) -> G:
        """Multiply left to right; the empty product is the identity."""
        return fold(self.multiply, elements, self.identity)


@dataclass(frozen=True, slots=True)
class ReducedWord(Generic[G]):
    """``x1 ... xn . x0``: alternating coset representatives and a tail in ``A``."""

    factors: tuple[G, ...]
    sides: tuple[Side, ...]
    tail: G

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def type_seq(self) -> tuple[int, ...]:
        return tuple(int(s) for s in self.sides)

    @property
    def first_side(self) -> Side | None:
        return self.sides[0] if self.sides else None

    @property
    def last_side(self) -> Side | None:
        return self.sides[-1] if self.sides else None

    def corner(self) -> tuple[int, int] | None:
        """``(first, last)`` side of the word, ``None`` for elements of ``A``."""
        if not self.sides:
            return None
        return (int(self.sides[0]), int(self.sides[-1]))

    def elements(self) -> list[G]:
        """The factors followed by the tail, as a word for :func:`reduce`."""
        return [*self.factors, self.tail]

    def recompose(self, spec: AmalgamSpec[G]) -> G:
        return spec.product(self.elements())

    def key(self, spec: AmalgamSpec[G]) -> tuple[Hashable, ...]:
        return (*(spec.key(x) for x in self.factors), spec.key(self.tail))


def _split(spec: AmalgamSpec[G], g: G, side: Side) -> tuple[G, G]:
    rep, rest = spec.coset_rep(g)
    if not spec.equal(spec.multiply(rep, rest), g):
        raise SpecViolation(f"{spec.name}: coset_rep does not factor its input")
    if not spec.in_a(rest):
        raise SpecViolation(f"{spec.name}: coset_rep remainder is outside A")
    if spec.in_a(rep):
        raise SpecViolation(f"{spec.name}: coset representative lies in A")
    if Side(spec.side_of(rep)) is not side:
        raise SpecViolation(f"{spec.name}: coset representative changed side")
    return rep, rest


def reduce(word: Iterable[G], spec: AmalgamSpec[G]) -> ReducedWord[G]:
    """Rewrite a product of factor-group elements into its reduced word.

    Each incoming element absorbs the current ``A``-tail on its left, merges
    with the last representative when both sit on the same side, and is then
    split into a coset representative and a new tail.
    """
    reps: list[G] = []
    sides: list[Side] = []
    tail = spec.identity
    for x in word:
        y = spec.multiply(tail, x)
        if spec.in_a(y):
            tail = y
            continue
        side = Side(spec.side_of(y))
        if sides and sides[-1] is side:
            sides.pop()
            y = spec.multiply(reps.pop(), y)
            if spec.in_a(y):
                tail = y
                continue
        rep, tail = _split(spec, y, side)
        reps.append(rep)
        sides.append(side)
    logger.debug("%s: reduced word of type %s", spec.name, [int(s) for s in sides])
    return ReducedWord(tuple(reps), tuple(sides), tail)


def reduced_inverse(word: ReducedWord[G], spec: AmalgamSpec[G]) -> ReducedWord[G]:
    """The reduced word of the inverse element."""
    inverted = [spec.invert(word.tail), *(spec.invert(x) for x in reversed(word.factors))]
    return reduce(inverted, spec)
