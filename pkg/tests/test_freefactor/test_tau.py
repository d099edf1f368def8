"""Tests for tau generators, tau words and the free factorization of Aut_1."""

import random

import pytest

from planelin.errors import BadShape, NotInAut1
from planelin.exactalg import QQ, FieldSpec, Mat2, ProjPoint, UniPoly, parse_automorphism
from planelin.freefactor import TauFactor, TauWord, conjugate_tau, free_factorize, merge, tau
from planelin.planeaut import PolyAut, compose, compose_all
from planelin.sampling import random_linear, random_point, random_tau_word


def aut(text: str, field: FieldSpec = QQ) -> PolyAut:
    return PolyAut(*parse_automorphism(text, field))


def point(a: int, b: int, field: FieldSpec = QQ) -> ProjPoint:
    return ProjPoint.of(field, a, b)


T2 = UniPoly.monomial(QQ, 1, 2)
T3 = UniPoly.monomial(QQ, 1, 3)

# ------------------------------------------------------------------
# Generators
# ------------------------------------------------------------------


class TestTau:
    """Tests for ``tau``."""

    def test_vertical_line_gives_t(self) -> None:
        """tau on the line (0:1) with t^2 is T."""
        assert tau(point(0, 1), T2) == aut("(x ; y + x^2)")

    def test_horizontal_line(self) -> None:
        """tau on the line (1:0) adds y^2 to x."""
        assert tau(point(1, 0), T2) == aut("(x + y^2 ; y)")

    def test_diagonal_line(self) -> None:
        """tau on the diagonal moves along (1, 1) by (x - y)^2."""
        assert tau(point(1, 1), T2) == aut("(x + (x - y)^2 ; y + (x - y)^2)")

    def test_fixes_origin_with_identity_differential(self, f5: FieldSpec) -> None:
        """Every tau over F_5 lies in Aut_1."""
        for delta in ProjPoint.enumerate(f5):
            phi = tau(delta, UniPoly(f5, [0, 0, 3, 1]))
            assert phi.fixes_origin
            assert phi.differential_at_origin().is_identity

    def test_additive_in_f(self) -> None:
        """tau on one line is additive in f."""
        delta = point(1, 2)
        assert compose(tau(delta, T2), tau(delta, T3)) == tau(delta, T2 + T3)

    @pytest.mark.parametrize(
        "coeffs", [[], [1, 0, 1], [0, 1, 1]], ids=["zero", "constant", "linear"]
    )
    def test_bad_shape(self, coeffs: list[int]) -> None:
        """f must lie in t^2 K[t]."""
        with pytest.raises(BadShape):
            tau(point(0, 1), UniPoly(QQ, coeffs))


class TestConjugateTau:
    """Tests for ``conjugate_tau``."""

    def test_flip_moves_vertical_to_horizontal(self) -> None:
        """Conjugating by the flip swaps the two coordinate lines."""
        flip = Mat2(0, 1, 1, 0, QQ)
        result = conjugate_tau(flip, TauFactor(point(0, 1), T2))
        assert result == TauFactor(point(1, 0), T2)

    @pytest.mark.parametrize("flag", ["q", "fp:7"])
    def test_matches_composition(self, flag: str, rng: random.Random) -> None:
        """L tau L^-1 computed on maps agrees with the closed form."""
        field = FieldSpec.parse(flag)
        for _ in range(10):
            linear = random_linear(field, rng)
            factor = TauFactor(random_point(field, rng), UniPoly(field, [0, 0, 2, 1]))
            lhs = compose_all(
                [
                    PolyAut.from_linear(linear),
                    factor.to_polyaut(),
                    PolyAut.from_linear(linear.inverse()),
                ]
            )
            assert conjugate_tau(linear, factor).to_polyaut() == lhs


# ------------------------------------------------------------------
# Words
# ------------------------------------------------------------------


class TestTauWord:
    """Tests for ``TauWord`` and ``merge``."""

    def test_merge_adds_and_drops_zeros(self) -> None:
        """Factors on the same line add, and zero factors vanish."""
        v, h = point(0, 1), point(1, 0)
        merged = merge([TauFactor(v, T2), TauFactor(v, -T2), TauFactor(h, T3)])
        assert merged == [TauFactor(h, T3)]

    def test_merge_cascades(self) -> None:
        """Removing a zero factor lets its neighbours merge."""
        v, h = point(0, 1), point(1, 0)
        merged = merge([TauFactor(v, T2), TauFactor(h, T3), TauFactor(h, -T3), TauFactor(v, T3)])
        assert merged == [TauFactor(v, T2 + T3)]

    def test_adjacent_equal_lines_rejected(self) -> None:
        """A reduced word never repeats a line."""
        with pytest.raises(BadShape):
            TauWord(QQ, (TauFactor(point(0, 1), T2), TauFactor(point(0, 1), T3)))

    def test_empty_word_is_identity(self) -> None:
        """The empty word is the identity."""
        word = TauWord(QQ)
        assert word.recompose().is_identity
        assert word.degree_product == 1
        assert str(word) == "id"

    @pytest.mark.parametrize("flag", ["q", "fp:5"])
    def test_degree_is_multiplicative(self, flag: str, rng: random.Random) -> None:
        """The degree of a word is the product of its factor degrees."""
        field = FieldSpec.parse(flag)
        for _ in range(8):
            word = random_tau_word(field, rng, rng.randint(1, 3), max_degree=3)
            assert word.recompose().degree == word.degree_product


# ------------------------------------------------------------------
# free_factorize
# ------------------------------------------------------------------


class TestFreeFactorize:
    """Tests for ``free_factorize``."""

    def test_identity(self) -> None:
        """The identity factorizes into the empty word."""
        assert free_factorize(PolyAut.identity(QQ)).length == 0

    def test_single_generator(self) -> None:
        """A single tau is its own word."""
        word = free_factorize(tau(point(1, 1), T3))
        assert word.factors == (TauFactor(point(1, 1), T3),)

    def test_commutator_of_two_lines(self) -> None:
        """A commutator of two lines keeps all four factors."""
        a, b = tau(point(0, 1), T2), tau(point(1, 0), T2)
        a_inv, b_inv = tau(point(0, 1), -T2), tau(point(1, 0), -T2)
        word = free_factorize(compose_all([a, b, a_inv, b_inv]))
        assert [f.delta for f in word.factors] == [point(0, 1), point(1, 0)] * 2
        assert word.degree_product == 16

    @pytest.mark.parametrize("flag", ["q", "fp:5", "fp:7"])
    def test_recovers_random_words(self, flag: str, rng: random.Random) -> None:
        """The tau normal form is unique, so the input word comes back."""
        field = FieldSpec.parse(flag)
        for _ in range(8):
            word = random_tau_word(field, rng, rng.randint(1, 3), max_degree=3)
            assert free_factorize(word.recompose()).factors == word.factors

    def test_translation_rejected(self) -> None:
        """A map moving the origin is outside Aut_1."""
        with pytest.raises(NotInAut1):
            free_factorize(aut("(x + 1 ; y + x^2)"))

    def test_nontrivial_differential_rejected(self) -> None:
        """A map with differential diag(2, 1) is outside Aut_1."""
        with pytest.raises(NotInAut1):
            free_factorize(aut("(2*x ; y + x^2)"))
