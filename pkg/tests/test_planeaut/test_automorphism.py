"""Tests for polynomial automorphisms and their affine and elementary subgroups."""

from fractions import Fraction

import pytest

from planelin.errors import FieldMismatch, SingularMatrix
from planelin.exactalg import QQ, BiPoly, FieldSpec, Mat2, UniPoly, parse_automorphism
from planelin.planeaut import (
    AffineAut,
    AutKind,
    ElementaryAut,
    PolyAut,
    compose,
    degree,
    differential_at_origin,
    fixes_origin,
    membership,
)


def aut(text: str, field: FieldSpec = QQ) -> PolyAut:
    return PolyAut(*parse_automorphism(text, field))


T = aut("(x ; y + x^2)")
S = PolyAut.from_linear(Mat2.scalar(QQ, Fraction(1, 2)))
S_INV = PolyAut.from_linear(Mat2.scalar(QQ, 2))


class TestCompose:
    """Tests for the group law."""

    def test_identity_law(self) -> None:
        """The identity is neutral on both sides."""
        assert compose(PolyAut.identity(QQ), T) == T
        assert compose(T, PolyAut.identity(QQ)) == T

    def test_square_of_t(self) -> None:
        """T^2 = (x ; y + 2x^2)."""
        assert compose(T, T) == aut("(x ; y + 2*x^2)")

    def test_conjugation_by_half_identity(self) -> None:
        """S T S^-1 = T^2."""
        assert compose(S, compose(T, S_INV)) == compose(T, T)

    def test_order_of_composition(self) -> None:
        """compose(phi, psi) applies psi first."""
        shift = aut("(x + 1 ; y)")
        assert compose(T, shift) == aut("(x + 1 ; y + x^2 + 2*x + 1)")
        assert compose(shift, T) == aut("(x + 1 ; y + x^2)")

    def test_field_mismatch(self, f7: FieldSpec) -> None:
        """Maps over different fields do not compose."""
        with pytest.raises(FieldMismatch):
            compose(T, PolyAut.identity(f7))


class TestInspection:
    """Tests for differential, origin and degree."""

    def test_t(self) -> None:
        """T fixes the origin with identity differential and has degree 2."""
        assert differential_at_origin(T).is_identity
        assert fixes_origin(T)
        assert degree(T) == 2

    def test_s_prime_differential(self) -> None:
        """The differential of a linear map is its matrix."""
        s_prime = PolyAut.from_linear(Mat2(1, 1, 1, 0, QQ))
        assert differential_at_origin(s_prime) == Mat2(1, 1, 1, 0, QQ)

    def test_degree_four(self) -> None:
        """Nesting two quadratic shears gives degree 4."""
        assert degree(aut("(x + y^2 ; y + (x + y^2)^2)")) == 4

    def test_identity_has_degree_one(self) -> None:
        """The identity has degree 1."""
        assert PolyAut.identity(QQ).degree == 1

    def test_evaluate(self) -> None:
        """Maps evaluate pointwise."""
        assert T(1, 1) == (1, 2)
        assert S(1, 1) == (Fraction(1, 2), Fraction(1, 2))


class TestMembership:
    """Tests for the syntactic classification."""

    def test_in_b(self) -> None:
        """Triangular affine maps lie in B."""
        assert membership(aut("(2*x + 1 ; 3*y + x - 4)")) is AutKind.IN_B

    def test_flip_is_affine(self) -> None:
        """The flip is affine but not triangular."""
        assert membership(PolyAut.flip(QQ)) is AutKind.AFFINE

    def test_t_is_elementary(self) -> None:
        """T is elementary but not affine."""
        assert membership(T) is AutKind.ELEMENTARY

    def test_general(self) -> None:
        """flip after T is neither affine nor elementary."""
        assert membership(compose(PolyAut.flip(QQ), T)) is AutKind.GENERAL

    def test_singular_linear_map_is_general(self) -> None:
        """A singular linear pair is not classified as affine."""
        assert membership(aut("(x + y ; x + y)")) is AutKind.GENERAL


class TestAffineAndElementary:
    """Tests for the structured subgroup elements."""

    def test_affine_round_trip(self) -> None:
        """AffineAut survives a trip through PolyAut and inverts."""
        a = AffineAut(Mat2(1, 2, 3, 4, QQ), (5, 6))
        assert AffineAut.from_polyaut(a.to_polyaut()) == a
        assert compose(a.to_polyaut(), a.inverse().to_polyaut()).is_identity

    def test_singular_affine_rejected(self) -> None:
        """An affine map needs an invertible matrix."""
        with pytest.raises(SingularMatrix):
            AffineAut(Mat2(1, 2, 2, 4, QQ))

    def test_elementary_inverse(self, f7: FieldSpec) -> None:
        """ElementaryAut.inverse is a two-sided inverse over F_7."""
        e = ElementaryAut(3, 2, 1, UniPoly(f7, [1, 2, 0, 5]))
        assert compose(e.to_polyaut(), e.inverse().to_polyaut()).is_identity
        assert compose(e.inverse().to_polyaut(), e.to_polyaut()).is_identity

    def test_zero_scale_rejected(self) -> None:
        """Both scales of an elementary map are nonzero."""
        with pytest.raises(SingularMatrix):
            ElementaryAut(0, 1, 0, UniPoly.t(QQ))

    def test_shear(self) -> None:
        """A shear by t^2 is T and leaves B; a shear by t stays in B."""
        assert ElementaryAut.shear(UniPoly.monomial(QQ, 1, 2)).to_polyaut() == T
        assert not ElementaryAut.shear(UniPoly.monomial(QQ, 1, 2)).in_b
        assert ElementaryAut.shear(UniPoly.t(QQ)).in_b

    def test_from_polyaut_reads_components(self) -> None:
        """Scales, translation and f are read off the pair."""
        e = ElementaryAut.from_polyaut(aut("(2*x + 1 ; 3*y + x^3 - x)"))
        assert (e.z1, e.z2, e.t0) == (2, 3, 1)
        assert e.f == UniPoly(QQ, [0, -1, 0, 1])

    def test_bipoly_components(self) -> None:
        """The components of T are bivariate polynomials."""
        assert T.g == BiPoly.y(QQ) + BiPoly.x(QQ) ** 2
