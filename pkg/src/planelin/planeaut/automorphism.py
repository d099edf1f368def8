"""Polynomial automorphisms of the plane and the affine and elementary subgroups.

``compose(phi, psi)`` is the map ``v -> phi(psi(v))``: the components of
``psi`` are substituted into those of ``phi``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

from planelin.errors import SingularMatrix
from planelin.exactalg import BiPoly, FieldSpec, Mat2, Raw, UniPoly, Vector
from planelin.exactalg.bipoly import compose_univariate


class AutKind(StrEnum):
    """Syntactic class of a polynomial pair."""

    IN_B = "InB"
    AFFINE = "Affine"
    ELEMENTARY = "Elementary"
    GENERAL = "General"


@dataclass(frozen=True, slots=True)
class PolyAut:
    """The map ``(x, y) -> (f, g)``.

    Maps built by the constructors and operations of this package are
    automorphisms; arbitrary pairs are certified by ``vdk_factorize``.
    """

    f: BiPoly
    g: BiPoly

    def __post_init__(self) -> None:
        self.f.field.check(self.g.field)

    @property
    def field(self) -> FieldSpec:
        return self.f.field

    @classmethod
    def identity(cls, field: FieldSpec) -> PolyAut:
        return cls(BiPoly.x(field), BiPoly.y(field))

    @classmethod
    def from_linear(cls, m: Mat2, translation: Vector | None = None) -> PolyAut:
        """The affine map ``v -> m v + translation``."""
        t0, t1 = translation or (0, 0)
        field = m.field
        return cls(BiPoly.linear(field, m.a, m.b, t0), BiPoly.linear(field, m.c, m.d, t1))

    @classmethod
    def flip(cls, field: FieldSpec) -> PolyAut:
        """``(x, y) -> (y, x)``."""
        return cls(BiPoly.y(field), BiPoly.x(field))

    @property
    def degree(self) -> int:
        return max(self.f.total_degree, self.g.total_degree)

    @property
    def translation(self) -> Vector:
        """The image of the origin."""
        return (self.f.constant_term, self.g.constant_term)

    @property
    def fixes_origin(self) -> bool:
        return self.f.constant_term == 0 and self.g.constant_term == 0

    def differential_at_origin(self) -> Mat2:
        """The matrix of the degree-one terms."""
        f, g = self.f, self.g
        return Mat2(f.coeff(1, 0), f.coeff(0, 1), g.coeff(1, 0), g.coeff(0, 1), self.field)

    @property
    def is_identity(self) -> bool:
        return self == PolyAut.identity(self.field)

    def __call__(self, a: Raw, b: Raw) -> Vector:
        return (self.f.evaluate(a, b), self.g.evaluate(a, b))

    def __str__(self) -> str:
        from planelin.exactalg.grammar import format_automorphism

        return format_automorphism(self.f, self.g)


def compose(phi: PolyAut, psi: PolyAut) -> PolyAut:
    """Return ``phi o psi``."""
    phi.field.check(psi.field)
    upow = psi.f.powers(max(phi.f.degree_in_x, phi.g.degree_in_x, 0))
    vpow = psi.g.powers(max(phi.f.degree_in_y, phi.g.degree_in_y, 0))
    return PolyAut(phi.f.subst_powers(upow, vpow), phi.g.subst_powers(upow, vpow))


def compose_all(factors: Sequence[PolyAut], field: FieldSpec | None = None) -> PolyAut:
    """``factors[0] o factors[1] o ... o factors[-1]``, folded from the right.

    The running product is substituted into each next factor, so the factor
    whose powers are taken is always the accumulated one.
    """
    if not factors:
        if field is None:
            raise ValueError("Empty composition needs an explicit field")
        return PolyAut.identity(field)
    acc = factors[-1]
    for phi in reversed(factors[:-1]):
        acc = compose(phi, acc)
    return acc


def differential_at_origin(phi: PolyAut) -> Mat2:
    return phi.differential_at_origin()


def fixes_origin(phi: PolyAut) -> bool:
    return phi.fixes_origin


def degree(phi: PolyAut) -> int:
    return phi.degree


# ----------------------------------------------------------------------
# Affine and elementary maps
# ----------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class AffineAut:
    """``v -> linear . v + translation`` with ``linear`` invertible."""

    linear: Mat2
    translation: Vector = (0, 0)

    def __post_init__(self) -> None:
        if self.linear.determinant == 0:
            raise SingularMatrix(f"Affine map with singular linear part {self.linear}")
        coerce = self.linear.field.coerce
        object.__setattr__(
            self, "translation", (coerce(self.translation[0]), coerce(self.translation[1]))
        )

    @property
    def field(self) -> FieldSpec:
        return self.linear.field

    @property
    def in_b(self) -> bool:
        """Whether the first coordinate only depends on ``x``."""
        return self.linear.is_lower_triangular

    @classmethod
    def from_polyaut(cls, phi: PolyAut) -> AffineAut:
        if membership(phi) not in (AutKind.AFFINE, AutKind.IN_B):
            raise ValueError(f"{phi} is not affine")
        return cls(phi.differential_at_origin(), phi.translation)

    def to_polyaut(self) -> PolyAut:
        return PolyAut.from_linear(self.linear, self.translation)

    def inverse(self) -> AffineAut:
        inv = self.linear.inverse()
        t0, t1 = inv.apply(self.translation)
        neg = self.field.neg
        return AffineAut(inv, (neg(t0), neg(t1)))


@dataclass(frozen=True, slots=True)
class ElementaryAut:
    """``(x, y) -> (z1 x + t0, z2 y + f(x))`` with ``z1 z2 != 0``."""

    z1: Raw
    z2: Raw
    t0: Raw
    f: UniPoly

    def __post_init__(self) -> None:
        coerce = self.f.field.coerce
        for name in ("z1", "z2", "t0"):
            object.__setattr__(self, name, coerce(getattr(self, name)))
        if self.z1 == 0 or self.z2 == 0:
            raise SingularMatrix("Elementary map with a zero scaling factor")

    @property
    def field(self) -> FieldSpec:
        return self.f.field

    @property
    def in_b(self) -> bool:
        return self.f.degree <= 1

    @classmethod
    def shear(cls, f: UniPoly) -> ElementaryAut:
        """``(x, y) -> (x, y + f(x))``."""
        return cls(1, 1, 0, f)

    @classmethod
    def from_polyaut(cls, phi: PolyAut) -> ElementaryAut:
        if membership(phi) not in (AutKind.ELEMENTARY, AutKind.IN_B):
            raise ValueError(f"{phi} is not elementary")
        z2 = phi.g.coeff(0, 1)
        rest = phi.g - BiPoly.monomial(phi.field, z2, 0, 1)
        return cls(phi.f.coeff(1, 0), z2, phi.f.constant_term, rest.to_unipoly())

    def to_polyaut(self) -> PolyAut:
        field = self.field
        first = BiPoly.linear(field, self.z1, 0, self.t0)
        second = BiPoly.monomial(field, self.z2, 0, 1) + BiPoly.from_unipoly(self.f)
        return PolyAut(first, second)

    def inverse(self) -> ElementaryAut:
        """``(x, y) -> ((x - t0)/z1, (y - f((x - t0)/z1))/z2)``."""
        field = self.field
        inv1, inv2 = field.inv(self.z1), field.inv(self.z2)
        shifted = UniPoly._make(field, [-self.t0 * inv1, inv1])
        return ElementaryAut(
            inv1, inv2, field.neg(self.t0 * inv1), self.f.compose(shifted).scale(-inv2)
        )


def _is_affine(phi: PolyAut) -> bool:
    return phi.degree <= 1 and phi.differential_at_origin().determinant != 0


def _is_elementary(phi: PolyAut) -> bool:
    f, g = phi.f, phi.g
    if f.coeff(1, 0) == 0 or any(key not in ((1, 0), (0, 0)) for key in f.terms):
        return False
    if g.coeff(0, 1) == 0:
        return False
    return all(j == 0 or (i, j) == (0, 1) for i, j in g.terms)


def membership(phi: PolyAut) -> AutKind:
    """Classify ``phi`` as an element of B, Aff, Elem, or none of them."""
    affine, elementary = _is_affine(phi), _is_elementary(phi)
    if affine and elementary:
        return AutKind.IN_B
    if affine:
        return AutKind.AFFINE
    if elementary:
        return AutKind.ELEMENTARY
    return AutKind.GENERAL


def tau_polyaut(field: FieldSpec, w: Vector, form: Vector, f: UniPoly) -> PolyAut:
    """``v -> v + f(form . v) w`` as a polynomial map."""
    inner = BiPoly.linear(field, form[0], form[1])
    image = compose_univariate(f, inner)
    return PolyAut(BiPoly.x(field) + image.scale(w[0]), BiPoly.y(field) + image.scale(w[1]))
