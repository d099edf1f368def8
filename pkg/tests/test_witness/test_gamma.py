"""Tests for the group generated by S, S' and T."""

from fractions import Fraction

import pytest

from planelin.errors import ParseError
from planelin.exactalg import QQ, BiPoly, Mat2
from planelin.planeaut import PolyAut, compose
from planelin.witness import (
    Letter,
    Syllable,
    distinctness_suite,
    gamma_generators,
    gamma_word,
    parse_letters,
    verify_gamma_relations,
    verify_s_prime_powers,
)
from planelin.witness.gamma import normalize


class TestGenerators:
    """Tests for ``gamma_generators`` and ``gamma_word``."""

    def test_generators(self) -> None:
        """s, s' and t are the expected maps."""
        s, s_prime, t = gamma_generators()
        assert s == PolyAut.from_linear(Mat2.scalar(QQ, Fraction(1, 2)))
        assert s_prime.differential_at_origin() == Mat2(1, 1, 1, 0, QQ)
        assert t.g == BiPoly.y(QQ) + BiPoly.x(QQ) ** 2

    def test_relation_word_is_trivial(self) -> None:
        """s t s^-1 t^-2 is the identity."""
        assert gamma_word(parse_letters("s t s^-1 t^-1 t^-1")).is_identity

    def test_commutator_of_s_and_s_prime(self) -> None:
        """s and s' commute."""
        assert gamma_word(parse_letters("s s' s^-1 s'^-1")).is_identity

    def test_word_order(self) -> None:
        """Letters compose left to right."""
        s, _, t = gamma_generators()
        assert gamma_word([Letter.SIGMA, Letter.TAU]) == compose(s, t)

    def test_parse_error_offset(self) -> None:
        """An unknown letter is reported at its offset."""
        with pytest.raises(ParseError) as info:
            parse_letters("s  q t")
        assert info.value.offset == 3


class TestNormalForms:
    """Tests for syllable normalization."""

    def test_s_pushes_through_t(self) -> None:
        """s t = t^2 s."""
        assert normalize([Syllable(0, 1), Syllable(2, 0, q=Fraction(1))]) == (
            Syllable(2, 1, q=Fraction(2)),
        )

    def test_inverse_of_t_syllable(self) -> None:
        """A syllable cancels against its inverse."""
        x = Syllable(2, 3, q=Fraction(5))
        assert normalize([x, x.inverse()]) == ()

    def test_syllable_automorphism_respects_merge(self) -> None:
        """Merging syllables agrees with composing their maps."""
        x, y = Syllable(2, -1, q=Fraction(3)), Syllable(2, 2, q=Fraction(-1, 2))
        (merged,) = normalize([x, y])
        assert merged.automorphism() == compose(x.automorphism(), y.automorphism())


class TestRelations:
    """Tests for the defining relations and their negative control."""

    def test_relations_hold(self) -> None:
        """Both defining relations hold."""
        report = verify_gamma_relations()
        assert report.passed
        assert [c.name for c in report.checks] == ["s s' = s' s", "s t s^-1 = t^2"]

    def test_cubic_control_fails(self) -> None:
        """Replacing t by a cubic shear breaks the second relation."""
        cubic = PolyAut(BiPoly.x(QQ), BiPoly.y(QQ) + BiPoly.x(QQ) ** 3)
        report = verify_gamma_relations(t_override=cubic)
        assert not report.passed
        assert [c.passed for c in report.checks] == [True, False]

    def test_s_prime_powers(self) -> None:
        """No nonzero power of S' up to 12 is triangular."""
        report = verify_s_prime_powers(12)
        assert report.passed
        assert len(report.checks) == 24


class TestDistinctness:
    """Distinct normal forms give distinct automorphisms."""

    def test_no_collisions(self) -> None:
        """Normal forms up to length 3 give distinct maps."""
        report = distinctness_suite(3)
        assert report.passed
        assert report.collisions == []
        assert report.length_bound == 3

    def test_ball_grows(self) -> None:
        """The ball of radius 1 has 7 normal forms."""
        small, large = distinctness_suite(1), distinctness_suite(2)
        assert small.normal_forms == 7
        assert large.normal_forms > small.normal_forms
        assert small.explored == 6
