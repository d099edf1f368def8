"""Orbit sections for the action of ``S`` on the projective line.

A section picks a representative line ``rep(delta)`` in every orbit and a
carrier ``g`` in ``S`` with ``g . rep(delta) = delta``. Three kinds exist:

* ``Trivial``: ``S`` is trivial, every line represents itself.
* ``CyclicExact``: ``S = <u>`` with ``u`` unipotent. Writing a line as
  ``e1 + s z0`` (``z0`` spans the fixed line, ``N e1 = z0`` for ``N = u - id``),
  ``u^k`` shifts ``s`` by ``k``, so ``s`` modulo the integers (all of ``F_p``)
  labels the orbit exactly.
* ``BoundedBFS``: the smallest image of ``delta`` under a ball of words;
  exact only when orbits fit in the ball, so it is cross-checked at runtime.
"""

from __future__ import annotations

import logging
import math
from enum import StrEnum
from typing import Protocol

from planelin.errors import SectionInconsistency
from planelin.exactalg import FieldSpec, Mat2, ProjPoint, Raw, Vector
from planelin.linmap.subgroup import SubgroupSpec, Word, invert_word, power_word

logger = logging.getLogger(__name__)


class SectionMode(StrEnum):
    TRIVIAL = "Trivial"
    CYCLIC_EXACT = "CyclicExact"
    BOUNDED_BFS = "BoundedBFS"


class OrbitSection(Protocol):
    """Representatives and carriers for the orbits of ``S`` on ``P^1``."""

    subgroup: SubgroupSpec
    mode: SectionMode

    def rep(self, delta: ProjPoint) -> ProjPoint: ...

    def carrier_word(self, delta: ProjPoint) -> Word: ...

    def carrier(self, delta: ProjPoint) -> Mat2: ...


class TrivialSection:
    mode = SectionMode.TRIVIAL

    def __init__(self, subgroup: SubgroupSpec) -> None:
        self.subgroup = subgroup

    def rep(self, delta: ProjPoint) -> ProjPoint:
        return delta

    def carrier_word(self, delta: ProjPoint) -> Word:
        return ()

    def carrier(self, delta: ProjPoint) -> Mat2:
        return Mat2.identity(self.subgroup.field)


class CyclicSection:
    """Exact section for a cyclic group generated by a unipotent ``u != id``."""

    mode = SectionMode.CYCLIC_EXACT

    def __init__(self, subgroup: SubgroupSpec) -> None:
        found = subgroup.unipotent_generator()
        if found is None:
            raise ValueError("CyclicExact sections need a single unipotent generator")
        self.subgroup = subgroup
        self.index, self.u = found
        field = subgroup.field
        self.nil = self.u - Mat2.identity(field)
        column = 0 if self.nil.column(0) != (0, 0) else 1
        self.fixed = ProjPoint.through(field, self.nil.column(column))
        z0 = self.fixed.vector
        # N e_column = c z0, so e1 = e_column / c satisfies N e1 = z0
        c = _ratio(self.nil.column(column), z0, field)
        unit = [field.zero, field.zero]
        unit[column] = field.inv(c)
        self.e1: Vector = (unit[0], unit[1])

    def _coordinate(self, delta: ProjPoint) -> Raw:
        """``s`` with ``delta`` spanned by ``e1 + s z0``."""
        field = self.subgroup.field
        w = delta.vector
        scale = field.inv(_ratio(self.nil.apply(w), self.fixed.vector, field))
        normalized = (field.reduce(w[0] * scale), field.reduce(w[1] * scale))
        diff = (normalized[0] - self.e1[0], normalized[1] - self.e1[1])
        return _ratio(diff, self.fixed.vector, field, allow_zero=True)

    def _shift(self, delta: ProjPoint) -> int:
        if delta == self.fixed:
            return 0
        s = self._coordinate(delta)
        if self.subgroup.field.is_rational:
            return math.floor(s)
        return int(s)

    def rep(self, delta: ProjPoint) -> ProjPoint:
        return delta.image(self.u ** -self._shift(delta))

    def carrier_word(self, delta: ProjPoint) -> Word:
        return power_word(self.index, self._shift(delta))

    def carrier(self, delta: ProjPoint) -> Mat2:
        return self.u ** self._shift(delta)


class BFSSection:
    """Best-effort section: the smallest image of ``delta`` under a word ball."""

    mode = SectionMode.BOUNDED_BFS

    def __init__(self, subgroup: SubgroupSpec, depth: int) -> None:
        self.subgroup = subgroup
        self.depth = depth
        self.ball = list(subgroup.elements(depth).items())
        self._cache: dict[ProjPoint, tuple[ProjPoint, Word]] = {}

    def _lookup(self, delta: ProjPoint) -> tuple[ProjPoint, Word]:
        cached = self._cache.get(delta)
        if cached is None:
            best: tuple[ProjPoint, Word] | None = None
            for m, word in self.ball:
                image = delta.image(m)
                if best is None or image.sort_key() < best[0].sort_key():
                    best = (image, word)
            assert best is not None
            cached = (best[0], invert_word(best[1]))
            self._cache[delta] = cached
        return cached

    def rep(self, delta: ProjPoint) -> ProjPoint:
        return self._lookup(delta)[0]

    def carrier_word(self, delta: ProjPoint) -> Word:
        return self._lookup(delta)[1]

    def carrier(self, delta: ProjPoint) -> Mat2:
        return self.subgroup.word_matrix(self.carrier_word(delta))


def _ratio(u: Vector, v: Vector, field: FieldSpec, allow_zero: bool = False) -> Raw:
    """``c`` with ``u = c v``."""
    i = 0 if v[0] != 0 else 1
    c = field.div(u[i], v[i])
    if not allow_zero and c == 0:
        raise ValueError("Vectors are not proportional by a nonzero factor")
    return c


def trivial_section(subgroup: SubgroupSpec) -> TrivialSection:
    return TrivialSection(subgroup)


def cyclic_section(subgroup: SubgroupSpec) -> CyclicSection:
    return CyclicSection(subgroup)


def bfs_section(subgroup: SubgroupSpec, depth: int) -> OrbitSection:
    """Depth 0 is the identity section."""
    if depth == 0:
        return TrivialSection(subgroup)
    return BFSSection(subgroup, depth)


def section_for(subgroup: SubgroupSpec, depth: int) -> OrbitSection:
    """The most exact section available for ``S``."""
    if subgroup.is_trivial:
        return TrivialSection(subgroup)
    if subgroup.unipotent_generator() is not None:
        return CyclicSection(subgroup)
    return BFSSection(subgroup, depth)


def acts_trivially(h: Mat2, line: ProjPoint) -> bool:
    """Whether ``h`` fixes ``w`` and ``l`` of the line, hence every ``tau`` on it."""
    w, (la, lb) = line.vector, line.form
    if h.apply(w) != w:
        return False
    inv = h.inverse()
    reduce = h.field.reduce
    return (reduce(la * inv.a + lb * inv.c), reduce(la * inv.b + lb * inv.d)) == (la, lb)


def check_section(section: OrbitSection, delta: ProjPoint) -> None:
    """Verify the section at ``delta`` against every generator and its inverse.

    Checks ``carrier . rep = delta``, that ``rep`` is unchanged by moving
    ``delta`` with a generator, and that the resulting stabilizer element of
    the representative acts trivially on its tau factors.
    """
    rep, carrier = section.rep(delta), section.carrier(delta)
    if rep.image(carrier) != delta:
        raise SectionInconsistency(f"Carrier does not move {rep} to {delta}")
    for _, s in section.subgroup.letters():
        moved = delta.image(s)
        if section.rep(moved) != rep:
            logger.warning("section splits the orbit of %s", delta)
            raise SectionInconsistency(f"Lines {delta} and {moved} got different representatives")
        stabilizer = section.carrier(moved).inverse() * s * carrier
        if not acts_trivially(stabilizer, rep):
            logger.warning("stabilizer %s of %s acts nontrivially", stabilizer, rep)
            raise SectionInconsistency(f"Stabilizer {stabilizer} of {rep} acts nontrivially")


def check_stabilizers(section: OrbitSection, lines: list[ProjPoint]) -> None:
    for delta in lines:
        check_section(section, delta)
