"""The generators ``tau_delta(f)`` of ``Aut_1 K^2`` and words in them.

``tau_delta(f)`` is the map ``v -> v + f(l(v)) w`` where ``(w, l)`` is the
canonical vector and form of the line ``delta`` (see
:func:`planelin.exactalg.e_delta`) and ``f`` lies in ``t^2 K[t]``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from planelin.errors import BadShape
from planelin.exactalg import FieldSpec, Mat2, ProjPoint, Raw, UniPoly, Vector
from planelin.planeaut import PolyAut, compose_all, tau_polyaut


def _check_shape(f: UniPoly) -> None:
    if f.is_zero:
        raise BadShape("tau needs a nonzero polynomial")
    if f.coeff(0) != 0 or f.coeff(1) != 0:
        raise BadShape(f"{f} has constant or linear terms")


@dataclass(frozen=True, slots=True)
class TauFactor:
    delta: ProjPoint
    f: UniPoly

    def __post_init__(self) -> None:
        self.delta.field.check(self.f.field)
        _check_shape(self.f)

    @property
    def field(self) -> FieldSpec:
        return self.f.field

    @property
    def degree(self) -> int:
        return self.f.degree

    def to_polyaut(self) -> PolyAut:
        return tau_polyaut(self.field, self.delta.vector, self.delta.form, self.f)

    def __str__(self) -> str:
        from planelin.exactalg.grammar import format_unipoly

        return f"tau{self.delta}({format_unipoly(self.f)})"


def tau(delta: ProjPoint, f: UniPoly) -> PolyAut:
    """``tau_delta(f)`` as a polynomial automorphism."""
    return TauFactor(delta, f).to_polyaut()


def _ratio(u: Vector, v: Vector, field: FieldSpec) -> Raw:
    """``c`` with ``u = c v`` for proportional nonzero vectors."""
    i = 0 if v[0] != 0 else 1
    return field.div(u[i], v[i])


def conjugate_tau(linear: Mat2, factor: TauFactor) -> TauFactor:
    """``L tau_delta(f) L^-1 = tau_{L delta}(mu f(lambda s))``.

    With ``L w = mu w'`` and ``l o L^-1 = lambda l'`` for the canonical pair
    ``(w', l')`` of the image line.
    """
    field = factor.field
    field.check(linear.field)
    inv = linear.inverse()
    image = factor.delta.image(linear)
    mu = _ratio(linear.apply(factor.delta.vector), image.vector, field)
    la, lb = factor.delta.form
    pulled = (field.reduce(la * inv.a + lb * inv.c), field.reduce(la * inv.b + lb * inv.d))
    lam = _ratio(pulled, image.form, field)
    return TauFactor(image, factor.f.dilate(lam).scale(mu))


def merge(factors: Iterable[TauFactor]) -> list[TauFactor]:
    """Add the polynomials of adjacent factors on the same line; drop zeros."""
    out: list[TauFactor] = []
    for factor in factors:
        if out and out[-1].delta == factor.delta:
            total = out.pop().f + factor.f
            if total.is_zero:
                continue
            factor = TauFactor(factor.delta, total)
        out.append(factor)
    return out


@dataclass(frozen=True, slots=True)
class TauWord:
    """``tau_1 o tau_2 o ... o tau_n`` with consecutive lines distinct."""

    field: FieldSpec
    factors: tuple[TauFactor, ...] = ()

    def __post_init__(self) -> None:
        for a, b in zip(self.factors, self.factors[1:], strict=False):
            if a.delta == b.delta:
                raise BadShape(f"Adjacent factors share the line {a.delta}")

    @classmethod
    def of(cls, field: FieldSpec, factors: Iterable[TauFactor]) -> TauWord:
        """Build a word, merging adjacent factors on the same line."""
        return cls(field, tuple(merge(factors)))

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def degree_product(self) -> int:
        product = 1
        for factor in self.factors:
            product *= factor.degree
        return product

    def recompose(self) -> PolyAut:
        return compose_all([t.to_polyaut() for t in self.factors], self.field)

    def __str__(self) -> str:
        return " o ".join(str(t) for t in self.factors) or "id"
