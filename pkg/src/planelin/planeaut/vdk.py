"""Jung-van der Kulk factorization: ``Aut K^2 = Aff *_B Elem``.

A candidate pair ``(f, g)`` is reduced by degree: swap coordinates when the
first component has the larger degree, then strip the leading form of the
second component with a shear ``(x, y) -> (x, y - c x^k)``. What remains must
be an invertible affine map. The collected factors are normalized by the
amalgam engine into canonical left-coset representatives:

* affine representatives ``[[0, 1], [1, s]]`` (the canonical matrix sending
  the line ``(0:1)`` to ``(1:s)``), with zero translation;
* elementary representatives ``(x, y + h(x))`` with ``h`` in ``t^2 K[t]``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from planelin.amalgam.engine import AmalgamSpec, ReducedWord, Side, reduce
from planelin.errors import NotAnAutomorphism, SpecViolation
from planelin.exactalg import BiPoly, FieldSpec, Mat2, ProjPoint, Raw, UniPoly
from planelin.planeaut.automorphism import (
    AffineAut,
    AutKind,
    ElementaryAut,
    PolyAut,
    compose,
    compose_all,
    membership,
)

logger = logging.getLogger(__name__)

Factor = AffineAut | ElementaryAut


def affine_coset_matrix(delta: ProjPoint) -> Mat2:
    """The canonical linear map sending ``(0:1)`` to ``delta``.

    ``(1:s)`` gets ``[[0, 1], [1, s]]``; ``(0:1)`` itself gets the identity.
    """
    field = delta.field
    if delta.a == 0:
        return Mat2.identity(field)
    return Mat2(0, 1, 1, delta.b, field)


def _affine_rep(phi: PolyAut) -> tuple[PolyAut, PolyAut]:
    linear = phi.differential_at_origin()
    delta = ProjPoint.through(phi.field, linear.column(1))
    rep = AffineAut(affine_coset_matrix(delta))
    return rep.to_polyaut(), compose(rep.inverse().to_polyaut(), phi)


def _elementary_rep(phi: PolyAut) -> tuple[PolyAut, PolyAut]:
    field = phi.field
    elem = ElementaryAut.from_polyaut(phi)
    inv1 = field.inv(elem.z1)
    # F(s) = f((s - t0)/z1); its part of degree >= 2 is the representative
    shifted = elem.f.compose(UniPoly._make(field, [-elem.t0 * inv1, inv1]))
    h = UniPoly._make(field, [0, 0, *shifted.coeffs[2:]])
    rep = ElementaryAut.shear(h)
    return rep.to_polyaut(), compose(rep.inverse().to_polyaut(), phi)


def _coset_rep(phi: PolyAut) -> tuple[PolyAut, PolyAut]:
    kind = membership(phi)
    if kind is AutKind.AFFINE:
        return _affine_rep(phi)
    if kind is AutKind.ELEMENTARY:
        return _elementary_rep(phi)
    raise SpecViolation(f"{phi} is not a coset of Aff or Elem outside B")


def _side_of(phi: PolyAut) -> Side:
    kind = membership(phi)
    if kind is AutKind.AFFINE:
        return Side.ONE
    if kind is AutKind.ELEMENTARY:
        return Side.TWO
    raise SpecViolation(f"{phi} is neither affine nor elementary outside B")


def _invert_factor(phi: PolyAut) -> PolyAut:
    kind = membership(phi)
    if kind in (AutKind.AFFINE, AutKind.IN_B):
        return AffineAut.from_polyaut(phi).inverse().to_polyaut()
    if kind is AutKind.ELEMENTARY:
        return ElementaryAut.from_polyaut(phi).inverse().to_polyaut()
    return inverse(phi)


@lru_cache(maxsize=16)
def vdk_amalgam(field: FieldSpec) -> AmalgamSpec[PolyAut]:
    """The amalgam ``Aff *_B Elem`` over ``field``."""
    t = UniPoly.t(field)
    return AmalgamSpec(
        identity=PolyAut.identity(field),
        multiply=compose,
        invert=_invert_factor,
        equal=lambda a, b: a == b,
        key=lambda phi: phi,
        in_a=lambda phi: membership(phi) is AutKind.IN_B,
        coset_rep=_coset_rep,
        side_of=_side_of,
        samples={
            Side.ONE: [PolyAut.flip(field), PolyAut.from_linear(Mat2(1, 1, 0, 1, field))],
            Side.TWO: [
                ElementaryAut.shear(t**2).to_polyaut(),
                ElementaryAut.shear(t**3).to_polyaut(),
            ],
        },
        name=f"vdK[{field}]",
    )


@dataclass(frozen=True, slots=True)
class VdkWord:
    """Reduced word ``r1 ... rn . b`` in ``Aff *_B Elem``."""

    factors: tuple[Factor, ...]
    tail: AffineAut

    @property
    def field(self) -> FieldSpec:
        return self.tail.field

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def type_seq(self) -> tuple[int, ...]:
        return tuple(1 if isinstance(r, AffineAut) else 2 for r in self.factors)

    def automorphisms(self) -> list[PolyAut]:
        """The factors and then the tail, as maps."""
        return [*(r.to_polyaut() for r in self.factors), self.tail.to_polyaut()]

    def recompose(self) -> PolyAut:
        return compose_all(self.automorphisms())

    @classmethod
    def from_reduced(cls, word: ReducedWord[PolyAut]) -> VdkWord:
        factors: list[Factor] = []
        for rep, side in zip(word.factors, word.sides, strict=True):
            if side is Side.ONE:
                factors.append(AffineAut.from_polyaut(rep))
            else:
                factors.append(ElementaryAut.from_polyaut(rep))
        return cls(tuple(factors), AffineAut.from_polyaut(word.tail))


def _proportionality(lead: BiPoly, target: BiPoly) -> Raw | None:
    """``c`` with ``lead = c . target``, or ``None``."""
    (monomial, value), *_ = target.items()
    c = lead.field.div(lead.coeff(*monomial), value)
    return c if lead == target.scale(c) else None


def vdk_factorize(f: BiPoly, g: BiPoly) -> VdkWord:
    """Certify ``(f, g)`` as an automorphism and return its reduced word.

    Raises:
        NotAnAutomorphism: a component is constant, leading forms are not
            proportional powers, or the residual affine part is singular.
    """
    f.field.check(g.field)
    field = f.field
    flip = PolyAut.flip(field)
    left: list[PolyAut] = []
    powers: list[BiPoly] = [BiPoly.constant(field, 1), f]
    while True:
        df, dg = f.total_degree, g.total_degree
        if df <= 1 and dg <= 1:
            break
        if df < 1 or dg < 1:
            raise NotAnAutomorphism("A component of the map is constant")
        if df > dg:
            f, g = g, f
            powers = [BiPoly.constant(field, 1), f]
            left.append(flip)
            continue
        k, remainder = divmod(dg, df)
        if remainder:
            raise NotAnAutomorphism(f"Degree {df} does not divide degree {dg}")
        c = _proportionality(g.leading_form(), f.leading_form() ** k)
        if c is None:
            raise NotAnAutomorphism(
                f"Leading form of degree {dg} is not a multiple of a power of the other"
            )
        while len(powers) <= k:
            powers.append(powers[-1] * f)
        g = g - powers[k].scale(c)
        left.append(ElementaryAut.shear(UniPoly.monomial(field, c, k)).to_polyaut())
        logger.debug("vdk: removed c*x^%d, degrees now (%d, %d)", k, df, g.total_degree)

    residual = PolyAut(f, g)
    if membership(residual) not in (AutKind.AFFINE, AutKind.IN_B):
        raise NotAnAutomorphism("Residual affine part is singular")
    word = VdkWord.from_reduced(reduce([*left, residual], vdk_amalgam(field)))
    logger.debug("vdk: factorized into type %s", word.type_seq)
    return word


def factorize(phi: PolyAut) -> VdkWord:
    return vdk_factorize(phi.f, phi.g)


def inverse(phi: PolyAut) -> PolyAut:
    """The inverse automorphism, from the inverted factors in reverse order."""
    kind = membership(phi)
    if kind in (AutKind.AFFINE, AutKind.IN_B):
        return AffineAut.from_polyaut(phi).inverse().to_polyaut()
    if kind is AutKind.ELEMENTARY:
        return ElementaryAut.from_polyaut(phi).inverse().to_polyaut()
    word = vdk_factorize(phi.f, phi.g)
    pieces = [word.tail.inverse().to_polyaut()]
    pieces.extend(r.inverse().to_polyaut() for r in reversed(word.factors))
    return compose_all(pieces)
