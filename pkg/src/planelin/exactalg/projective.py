"""Points of the projective line and the square-zero matrices ``e_delta``."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from planelin.exactalg.field import FieldSpec, Raw
from planelin.exactalg.matrix import Mat2, Vector


@dataclass(frozen=True, slots=True)
class ProjPoint:
    """A line through the origin of K^2, stored as ``(1 : b)`` or ``(0 : 1)``."""

    a: Raw
    b: Raw
    field: FieldSpec

    def __post_init__(self) -> None:
        f = self.field
        a, b = f.coerce(self.a), f.coerce(self.b)
        if a != 0:
            a, b = f.one, f.div(b, a)
        elif b != 0:
            b = f.one
        else:
            raise ValueError("(0:0) is not a point of the projective line")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def of(cls, field: FieldSpec, a: Raw, b: Raw) -> ProjPoint:
        return cls(a, b, field)

    @classmethod
    def through(cls, field: FieldSpec, vector: Vector) -> ProjPoint:
        """The line spanned by a nonzero vector."""
        return cls(vector[0], vector[1], field)

    @classmethod
    def enumerate(cls, field: FieldSpec) -> Iterator[ProjPoint]:
        """All ``p + 1`` points over a prime field: ``(1:0), ..., (1:p-1), (0:1)``."""
        for b in field.elements():
            yield cls(1, b, field)
        yield cls(0, 1, field)

    @property
    def vector(self) -> Vector:
        """The canonical spanning vector ``w``."""
        return (self.a, self.b)

    @property
    def form(self) -> Vector:
        """The canonical linear form ``l`` vanishing on the line.

        ``l = (b, -a)`` except at ``(1:0)``, which takes ``l = (0, 1)`` so that
        ``e_(1:0)`` is the elementary matrix ``[[0,1],[0,0]]``.
        """
        if self.b == 0:
            return (self.field.zero, self.field.one)
        return (self.b, self.field.neg(self.a))

    def contains(self, vector: Vector) -> bool:
        """Whether the vector lies on this line."""
        x, y = vector
        return self.field.reduce(self.a * y - self.b * x) == 0

    def image(self, m: Mat2) -> ProjPoint:
        """The line ``m . delta``."""
        self.field.check(m.field)
        return ProjPoint.through(self.field, m.apply(self.vector))

    def sort_key(self) -> tuple[Raw, Raw]:
        return (self.a, self.b)

    def __str__(self) -> str:
        fmt = self.field.format
        return f"({fmt(self.a)}:{fmt(self.b)})"


def e_delta(delta: ProjPoint) -> Mat2:
    """The square-zero matrix ``w . l^T`` whose image is the line ``delta``."""
    (wa, wb), (la, lb) = delta.vector, delta.form
    return Mat2(wa * la, wa * lb, wb * la, wb * lb, delta.field)


def in_e_space(m: Mat2, delta: ProjPoint) -> bool:
    """Whether the image of ``m`` lies on ``delta`` (the space ``E`` of the line)."""
    la, lb = delta.form
    reduce = m.field.reduce
    return reduce(la * m.a + lb * m.c) == 0 and reduce(la * m.b + lb * m.d) == 0
