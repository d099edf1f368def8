"""``GL_1(2, K[t])``, its generators ``E_delta`` and the generation algorithm.

``GL_1(2, K[t])`` is the group of polynomial matrices ``G`` with ``det G = 1``
and ``G(0) = id``. It is the free product of the groups
``E_delta = {id + t f(t) e_delta}`` over the points ``delta`` of the
projective line.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from planelin.errors import BadShape, InternalAssertion, NotInGL1
from planelin.exactalg import (
    FieldSpec,
    Mat2,
    MatPoly2,
    ProjPoint,
    Raw,
    Scalar,
    UniPoly,
    e_delta,
    in_e_space,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class EFactor:
    """The matrix ``id + t f(t) e_delta`` with ``f != 0``."""

    delta: ProjPoint
    f: UniPoly

    def __post_init__(self) -> None:
        self.delta.field.check(self.f.field)
        if self.f.is_zero:
            raise BadShape("E-factor needs a nonzero polynomial")

    @property
    def field(self) -> FieldSpec:
        return self.f.field

    def matrix(self) -> MatPoly2:
        e = e_delta(self.delta)
        u = self.f.shift_up(1)
        return MatPoly2(u.scale(e.a) + 1, u.scale(e.b), u.scale(e.c), u.scale(e.d) + 1)

    def __str__(self) -> str:
        from planelin.exactalg.grammar import format_unipoly

        return f"E{self.delta}({format_unipoly(self.f)})"


def merge_efactors(factors: Iterable[EFactor]) -> list[EFactor]:
    """Combine adjacent factors on the same line; ``e_delta^2 = 0`` makes them add."""
    out: list[EFactor] = []
    for factor in factors:
        if out and out[-1].delta == factor.delta:
            total = out.pop().f + factor.f
            if total.is_zero:
                continue
            factor = EFactor(factor.delta, total)
        out.append(factor)
    return out


@dataclass(frozen=True, slots=True)
class EWord:
    """Product ``E_1 E_2 ... E_n`` with consecutive lines distinct."""

    field: FieldSpec
    factors: tuple[EFactor, ...] = ()

    def __post_init__(self) -> None:
        for a, b in zip(self.factors, self.factors[1:], strict=False):
            if a.delta == b.delta:
                raise BadShape(f"Adjacent E-factors share the line {a.delta}")

    @classmethod
    def of(cls, field: FieldSpec, factors: Iterable[EFactor]) -> EWord:
        return cls(field, tuple(merge_efactors(factors)))

    @property
    def length(self) -> int:
        return len(self.factors)

    def recompose(self) -> MatPoly2:
        acc = MatPoly2.identity(self.field)
        for factor in self.factors:
            acc = acc * factor.matrix()
        return acc

    def __str__(self) -> str:
        return " . ".join(str(f) for f in self.factors) or "id"


def is_in_GL1(g: MatPoly2) -> bool:  # noqa: N802
    """``det G = 1`` and ``G(0) = id``."""
    return g.det() == UniPoly.one(g.field) and g.eval0().is_identity


def bracket(a: Mat2, b: Mat2) -> Scalar:
    """The polarization ``det(A + B) - det A - det B``."""
    a.field.check(b.field)
    field = a.field
    return Scalar(field.reduce((a + b).determinant - a.determinant - b.determinant), field)


def _image_line(m: Mat2) -> ProjPoint:
    column = m.column(0) if m.column(0) != (0, 0) else m.column(1)
    return ProjPoint.through(m.field, column)


def _solve_multiple(target: Mat2, base: Mat2) -> Raw | None:
    """``c`` with ``target = c . base``, or ``None``."""
    field = target.field
    for t_entry, b_entry in zip(_entries(target), _entries(base), strict=True):
        if b_entry != 0:
            c = field.div(t_entry, b_entry)
            return c if base.scale(c) == target else None
    return None


def _entries(m: Mat2) -> tuple[Raw, Raw, Raw, Raw]:
    return (m.a, m.b, m.c, m.d)


def generation_steps(g: MatPoly2) -> Iterator[tuple[int, EFactor]]:
    """Run the degree-lowering loop, yielding ``(degree before step, factor)``.

    With ``A_N`` the top coefficient and ``delta`` its image line, ``n`` is
    the largest index below ``N`` whose coefficient does not map into
    ``delta``. The step strips ``(id + c t^(N-n) e_delta)`` from the left.
    """
    if not is_in_GL1(g):
        raise NotInGL1(f"{g} is not in GL_1(2, K[t])")
    field = g.field
    while g.degree > 0:
        top_degree = g.degree
        top = g.coefficient(top_degree)
        if top.rank != 1:
            raise InternalAssertion(f"Top coefficient {top} does not have rank one")
        delta = _image_line(top)
        e = e_delta(delta)
        n = next(
            (m for m in range(top_degree - 1, -1, -1) if not in_e_space(g.coefficient(m), delta)),
            None,
        )
        if n is None:
            raise InternalAssertion("Every coefficient maps into the top image line")
        c = _solve_multiple(top, e * g.coefficient(n))
        if c is None:
            raise InternalAssertion(f"Top coefficient is not a multiple of e_delta A_{n}")
        shift = top_degree - n
        factor = EFactor(delta, UniPoly.monomial(field, c, shift - 1))
        strip = EFactor(delta, UniPoly.monomial(field, field.neg(c), shift - 1))
        g = strip.matrix() * g
        if g.degree >= top_degree:
            raise InternalAssertion("Generation step did not lower the degree")
        logger.debug("generation: degree %d -> %d along %s", top_degree, g.degree, delta)
        yield top_degree, factor


def e_generation_factorize(g: MatPoly2) -> EWord:
    """Write ``G`` in ``GL_1(2, K[t])`` as its reduced word in the ``E_delta``."""
    factors = [factor for _, factor in generation_steps(g)]
    return EWord.of(g.field, factors)
