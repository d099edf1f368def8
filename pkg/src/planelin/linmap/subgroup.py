"""Finitely generated subgroups ``S`` of ``GL(2, K)`` given by generators.

Words in the generators are tuples of signed 1-based indices: ``i`` stands
for the ``i``-th generator and ``-i`` for its inverse.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from planelin.errors import SingularMatrix
from planelin.exactalg import FieldSpec, Mat2

logger = logging.getLogger(__name__)

Word = tuple[int, ...]


def invert_word(word: Word) -> Word:
    return tuple(-i for i in reversed(word))


def power_word(index: int, k: int) -> Word:
    """The word for ``s_index^k``."""
    return (index if k >= 0 else -index,) * abs(k)


@dataclass(frozen=True, slots=True)
class SubgroupSpec:
    """``S = <generators>`` inside ``GL(2, field)``."""

    field: FieldSpec
    generators: tuple[Mat2, ...]

    def __post_init__(self) -> None:
        for g in self.generators:
            self.field.check(g.field)
            if g.determinant == 0:
                raise SingularMatrix(f"Generator {g} is not invertible")

    @classmethod
    def of(cls, field: FieldSpec, generators: Iterable[Mat2]) -> SubgroupSpec:
        return cls(field, tuple(generators))

    @property
    def is_trivial(self) -> bool:
        return all(g.is_identity for g in self.generators)

    def letter(self, i: int) -> Mat2:
        g = self.generators[abs(i) - 1]
        return g if i > 0 else g.inverse()

    def letters(self) -> list[tuple[int, Mat2]]:
        out: list[tuple[int, Mat2]] = []
        for i in range(1, len(self.generators) + 1):
            out.append((i, self.letter(i)))
            out.append((-i, self.letter(-i)))
        return out

    def word_matrix(self, word: Word) -> Mat2:
        acc = Mat2.identity(self.field)
        for i in word:
            acc = acc * self.letter(i)
        return acc

    @staticmethod
    def format_word(word: Word) -> list[str]:
        return [f"s{i}" if i > 0 else f"s{-i}^-1" for i in word]

    def unipotent_generator(self) -> tuple[int, Mat2] | None:
        """The only non-identity generator, when there is one and it is unipotent."""
        distinct = {g for g in self.generators if not g.is_identity}
        if len(distinct) != 1:
            return None
        (u,) = distinct
        if u.trace != self.field.reduce(2) or u.determinant != 1:
            return None
        return self.generators.index(u) + 1, u

    def elements(self, bound: int) -> dict[Mat2, Word]:
        """Distinct elements reachable by words of length ``<= bound``, in BFS order."""
        identity = Mat2.identity(self.field)
        seen: dict[Mat2, Word] = {identity: ()}
        frontier: list[tuple[Mat2, Word]] = [(identity, ())]
        letters = self.letters()
        for _ in range(bound):
            nxt: list[tuple[Mat2, Word]] = []
            for m, word in frontier:
                for i, g in letters:
                    product = m * g
                    if product not in seen:
                        seen[product] = (*word, i)
                        nxt.append((product, seen[product]))
            frontier = nxt
            if not frontier:
                break
        logger.debug("subgroup ball of radius %d has %d elements", bound, len(seen))
        return seen

    def express(self, m: Mat2, bound: int) -> Word | None:
        """A word for ``m``, or ``None`` if none is found.

        Cyclic unipotent groups are solved exactly; otherwise words up to
        ``bound`` are searched.
        """
        self.field.check(m.field)
        if m.is_identity:
            return ()
        cyclic = self.unipotent_generator()
        if cyclic is not None:
            index, u = cyclic
            return _unipotent_log(m, u, index)
        return self.elements(bound).get(m)


def _unipotent_log(m: Mat2, u: Mat2, index: int) -> Word | None:
    field = m.field
    nil = u - Mat2.identity(field)
    diff = m - Mat2.identity(field)
    pairs = zip((nil.a, nil.b, nil.c, nil.d), (diff.a, diff.b, diff.c, diff.d), strict=True)
    ratio = next((field.div(d, n) for n, d in pairs if n != 0), None)
    if ratio is None:
        return None
    if isinstance(ratio, Fraction) and ratio.denominator != 1:
        return None
    k = int(ratio)
    if nil.scale(k) != diff:
        return None
    return power_word(index, k)
