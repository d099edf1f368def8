"""Conjugating a nontrivial element into a prescribed corner type.

A reduced word has corner ``(i, j)`` when it starts in ``G_i`` and ends in
``G_j``. Every element other than the identity of a nontrivial amalgam is
conjugate into both corners ``(1, 1)`` and ``(2, 2)``; for elements of ``A``
this needs an outside witness moving them out of ``A`` first.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Generic, TypeVar

from planelin.amalgam.engine import AmalgamSpec, ReducedWord, Side, reduce
from planelin.errors import NeedsHWitness, SpecViolation

logger = logging.getLogger(__name__)

G = TypeVar("G")

HWitness = Callable[[G], Sequence[G]]
"""Given ``a`` in ``A``, return a word for some ``g`` with ``g a g^-1`` outside ``A``."""


class Corner(Enum):
    ONE_ONE = 1
    TWO_TWO = 2

    @property
    def side(self) -> Side:
        return Side(self.value)

    @classmethod
    def parse(cls, text: str) -> Corner:
        match text.strip():
            case "11":
                return cls.ONE_ONE
            case "22":
                return cls.TWO_TWO
        raise ValueError(f"Unknown corner {text!r} (expected 11 or 22)")


@dataclass(frozen=True, slots=True)
class Conjugation(Generic[G]):
    """A conjugator ``g`` (as a word of factor elements) and the reduced ``g w g^-1``."""

    conjugator: tuple[G, ...]
    conjugate: ReducedWord[G]


def _conjugate(
    spec: AmalgamSpec[G], gamma: Sequence[G], word: ReducedWord[G]
) -> ReducedWord[G]:
    inverse = [spec.invert(x) for x in reversed(gamma)]
    return reduce([*gamma, *word.elements(), *inverse], spec)


def _in_corner(word: ReducedWord[G], side: Side) -> bool:
    return word.first_side is side and word.last_side is side


def _candidates(spec: AmalgamSpec[G], side: Side) -> list[G]:
    out: list[G] = []
    for s in (side, side.other):
        for g in spec.samples.get(s, ()):
            out.extend((g, spec.invert(g)))
    return out


def conjugate_to_type(
    word: ReducedWord[G],
    corner: Corner,
    spec: AmalgamSpec[G],
    h_witness: HWitness[G] | None = None,
) -> Conjugation[G]:
    """Find ``g`` with ``g w g^-1`` reduced of the requested corner type.

    Words already in the corner get the empty conjugator. Otherwise one sample
    element (or its inverse) of either side is tried at a time, and each
    candidate is checked by reducing the conjugate.
    """
    side = corner.side
    prefix: tuple[G, ...] = ()
    if word.length == 0:
        if spec.equal(word.tail, spec.identity):
            raise SpecViolation("The identity is not conjugate into any corner")
        if h_witness is None:
            raise NeedsHWitness("Element of A needs a witness moving it out of A")
        prefix = tuple(h_witness(word.tail))
        word = _conjugate(spec, prefix, word)
        if word.length == 0:
            raise SpecViolation("Witness conjugate still lies in A")
        logger.debug("%s: witness moved A-element to type %s", spec.name, word.type_seq)

    if _in_corner(word, side):
        return Conjugation(prefix, word)

    for gamma in _candidates(spec, side):
        conjugate = _conjugate(spec, [gamma], word)
        if _in_corner(conjugate, side):
            logger.debug(
                "%s: corner %s reached, type %s", spec.name, corner.name, conjugate.type_seq
            )
            return Conjugation((gamma, *prefix), conjugate)

    raise SpecViolation(f"{spec.name}: no sample element conjugates into corner {corner.name}")
