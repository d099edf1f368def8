"""Tests for reduced words and corner conjugation in amalgamated products."""

import dataclasses
import random
from fractions import Fraction

import pytest

from planelin.amalgam import Corner, Side, conjugate_to_type, reduce, reduced_inverse
from planelin.errors import NeedsHWitness, SpecViolation
from planelin.exactalg import QQ, FieldSpec, Mat2, UniPoly
from planelin.planeaut import ElementaryAut, PolyAut, compose_all, vdk_amalgam
from planelin.sampling import random_affine, random_aut_word, random_elementary
from planelin.witness import (
    LETTERS,
    Letter,
    Syllable,
    gamma_amalgam,
    gamma_automorphism,
    gamma_h_witness,
    gamma_word,
    parse_letters,
)


def letters(text: str) -> list[tuple[Syllable, ...]]:
    return [(LETTERS[letter],) for letter in parse_letters(text)]


T = ElementaryAut.shear(UniPoly.monomial(QQ, 1, 2)).to_polyaut()
FLIP = PolyAut.flip(QQ)

# ------------------------------------------------------------------
# reduce
# ------------------------------------------------------------------


class TestReduceGamma:
    """Reduction in the abstract group ``<s, s'> *_<s> <s, t>``."""

    def test_a_element_is_all_tail(self) -> None:
        """A word inside the amalgamated subgroup has no factors."""
        word = reduce(letters("s s s^-1"), gamma_amalgam())
        assert word.length == 0
        assert word.tail == (Syllable(0, 1),)
        assert word.corner() is None

    def test_conjugate_of_t_by_t(self) -> None:
        """t s t^-1 reduces to t^-1 . s."""
        word = reduce(letters("t s t^-1"), gamma_amalgam())
        assert word.type_seq == (2,)
        assert word.factors == ((Syllable(2, 0, q=Fraction(-1)),),)
        assert word.tail == (Syllable(0, 1),)

    def test_defining_relation(self) -> None:
        """Both sides of s t s^-1 = t^2 reduce to the same word."""
        spec = gamma_amalgam()
        assert reduce(letters("s t s^-1"), spec) == reduce(letters("t t"), spec)

    def test_alternating_type(self) -> None:
        """Letters from alternating sides keep their type sequence."""
        word = reduce(letters("s' t s'^-1 t^-1"), gamma_amalgam())
        assert word.type_seq == (1, 2, 1, 2)
        assert word.corner() == (1, 2)

    def test_cancellation(self) -> None:
        """A word and its mirror image cancel completely."""
        word = reduce(letters("s' t t^-1 s'^-1"), gamma_amalgam())
        assert word.length == 0
        assert word.tail == ()

    @pytest.mark.parametrize(
        "text",
        ["s' t", "t s s' t^-1 s'", "s^-1 t s' s' t t s'^-1 s", "t^-1 s' s t s'^-1 t^-1"],
    )
    def test_reduced_word_evaluates_like_the_letters(self, text: str) -> None:
        """The reduced word is the same automorphism as the letters."""
        word = reduce(letters(text), gamma_amalgam())
        assert gamma_automorphism(word) == gamma_word(parse_letters(text))

    def test_reduced_inverse(self) -> None:
        """A word times its reduced inverse reduces to the identity."""
        spec = gamma_amalgam()
        word = reduce(letters("s' t s s'^-1 t"), spec)
        inverse = reduced_inverse(word, spec)
        product = reduce([*word.elements(), *inverse.elements()], spec)
        assert product.length == 0
        assert product.tail == ()
        assert inverse.type_seq == (2, 1, 2, 1)


class TestReduceVdk:
    """Reduction in ``Aff *_B Elem``."""

    def test_merging_same_side(self) -> None:
        """Two elementary maps merge into a single factor."""
        word = reduce([T, T], vdk_amalgam(QQ))
        assert word.type_seq == (2,)
        assert word.recompose(vdk_amalgam(QQ)) == compose_all([T, T])

    def test_elementary_and_inverse_cancel(self) -> None:
        """An elementary map and its inverse leave an identity tail."""
        spec = vdk_amalgam(QQ)
        word = reduce([T, spec.invert(T)], spec)
        assert word.length == 0
        assert word.tail.is_identity

    def test_flip_conjugate_of_t(self) -> None:
        """Conjugating T by the flip has type (1, 2, 1)."""
        spec = vdk_amalgam(QQ)
        word = reduce([FLIP, T, FLIP], spec)
        assert word.type_seq == (1, 2, 1)
        assert word.recompose(spec) == compose_all([FLIP, T, FLIP])

    def test_b_element_absorbed_between_factors(self) -> None:
        """An element of B between two factors merges them."""
        spec = vdk_amalgam(QQ)
        b = PolyAut.from_linear(Mat2(2, 0, 1, 3, QQ), (1, -1))
        word = reduce([T, b, T], spec)
        assert word.length == 1
        assert word.recompose(spec) == compose_all([T, b, T])


class TestReduceVdkProperties:
    """Seeded invariants of reduction in ``Aff *_B Elem``."""

    FIELDS = [QQ, FieldSpec.prime(2)]

    @staticmethod
    def _factor(field: FieldSpec, rng: random.Random) -> PolyAut:
        if rng.random() < 0.5:
            return random_affine(field, rng).to_polyaut()
        return random_elementary(field, rng).to_polyaut()

    @pytest.mark.parametrize("field", FIELDS, ids=["q", "f2"])
    def test_alternating_type(self, field: FieldSpec) -> None:
        """S' T S'^-1 T has type (1, 2, 1, 2)."""
        spec = vdk_amalgam(field)
        s_prime = PolyAut.from_linear(Mat2(1, 1, 1, 0, field))
        t = ElementaryAut.shear(UniPoly.monomial(field, 1, 2)).to_polyaut()
        word = reduce([s_prime, t, spec.invert(s_prime), t], spec)
        assert word.type_seq == (1, 2, 1, 2)
        assert word.recompose(spec) == compose_all([s_prime, t, spec.invert(s_prime), t])

    @pytest.mark.parametrize("field", FIELDS, ids=["q", "f2"])
    def test_inserting_a_cancelling_pair(self, field: FieldSpec, rng: random.Random) -> None:
        """Inserting g g^-1 anywhere leaves the reduced word unchanged."""
        spec = vdk_amalgam(field)
        for _ in range(15):
            word = random_aut_word(field, rng, rng.randint(1, 5))
            g = self._factor(field, rng)
            k = rng.randint(0, len(word))
            padded = reduce([*word[:k], g, spec.invert(g), *word[k:]], spec)
            plain = reduce(word, spec)
            assert padded.type_seq == plain.type_seq
            assert padded.recompose(spec) == plain.recompose(spec)

    @pytest.mark.parametrize("field", FIELDS, ids=["q", "f2"])
    def test_reassociation(self, field: FieldSpec, rng: random.Random) -> None:
        """Reducing a prefix first gives the same length and type."""
        spec = vdk_amalgam(field)
        for _ in range(15):
            word = random_aut_word(field, rng, rng.randint(2, 5))
            k = rng.randint(1, len(word) - 1)
            prefix = reduce(word[:k], spec)
            regrouped = reduce([*prefix.elements(), *word[k:]], spec)
            plain = reduce(word, spec)
            assert regrouped.length == plain.length
            assert regrouped.type_seq == plain.type_seq

    @pytest.mark.parametrize("field", FIELDS, ids=["q", "f2"])
    def test_reduction_is_idempotent(self, field: FieldSpec, rng: random.Random) -> None:
        """A reduced word reduces to itself."""
        spec = vdk_amalgam(field)
        for _ in range(15):
            reduced = reduce(random_aut_word(field, rng, rng.randint(1, 5)), spec)
            again = reduce(reduced.elements(), spec)
            assert again.type_seq == reduced.type_seq
            assert again.recompose(spec) == reduced.recompose(spec)


class TestSpecChecks:
    """The engine rejects coset representatives that break the contract."""

    def test_remainder_must_factor(self) -> None:
        """A remainder that does not recover the input is rejected."""
        spec = dataclasses.replace(
            gamma_amalgam(), coset_rep=lambda g: (g, (Syllable(0, 1),))
        )
        with pytest.raises(SpecViolation):
            reduce(letters("t"), spec)

    def test_representative_outside_a(self) -> None:
        """A representative inside A is rejected."""
        spec = dataclasses.replace(gamma_amalgam(), coset_rep=lambda g: ((), g))
        with pytest.raises(SpecViolation):
            reduce(letters("s'"), spec)


# ------------------------------------------------------------------
# conjugate_to_type
# ------------------------------------------------------------------


class TestConjugateToType:
    """Tests for ``conjugate_to_type``."""

    @pytest.mark.parametrize("corner", [Corner.ONE_ONE, Corner.TWO_TWO])
    def test_mixed_word_reaches_both_corners(self, corner: Corner) -> None:
        """A word of type (1, 2) is conjugated into either corner."""
        spec = gamma_amalgam()
        word = reduce(letters("s' t"), spec)
        result = conjugate_to_type(word, corner, spec)
        assert result.conjugate.first_side is corner.side
        assert result.conjugate.last_side is corner.side
        inverse = [spec.invert(g) for g in reversed(result.conjugator)]
        assert result.conjugate == reduce([*result.conjugator, *word.elements(), *inverse], spec)

    def test_word_already_in_corner(self) -> None:
        """A word already in the corner needs no conjugator."""
        spec = gamma_amalgam()
        word = reduce(letters("t s' t"), spec)
        result = conjugate_to_type(word, Corner.TWO_TWO, spec)
        assert result.conjugator == ()
        assert result.conjugate == word

    def test_a_element_needs_witness(self) -> None:
        """An element of A cannot be moved without a witness."""
        spec = gamma_amalgam()
        word = reduce(letters("s"), spec)
        with pytest.raises(NeedsHWitness):
            conjugate_to_type(word, Corner.ONE_ONE, spec)

    @pytest.mark.parametrize("corner", [Corner.ONE_ONE, Corner.TWO_TWO])
    def test_a_element_with_witness(self, corner: Corner) -> None:
        """The witness hook moves an element of A into both corners."""
        spec = gamma_amalgam()
        word = reduce(letters("s"), spec)
        result = conjugate_to_type(word, corner, spec, gamma_h_witness)
        assert result.conjugate.corner() == (corner.value, corner.value)
        assert (LETTERS[Letter.TAU],) in result.conjugator

    def test_identity_rejected(self) -> None:
        """The identity has no conjugate outside A."""
        spec = gamma_amalgam()
        with pytest.raises(SpecViolation):
            conjugate_to_type(reduce([], spec), Corner.ONE_ONE, spec, gamma_h_witness)

    def test_vdk_word(self) -> None:
        """A van der Kulk word reaches the elementary corner."""
        spec = vdk_amalgam(QQ)
        word = reduce([FLIP, T], spec)
        result = conjugate_to_type(word, Corner.TWO_TWO, spec)
        assert result.conjugate.corner() == (2, 2)

    def test_corner_parse(self) -> None:
        """Corners parse from 11 and 22 only."""
        assert Corner.parse("11") is Corner.ONE_ONE
        assert Corner.parse(" 22 ") is Corner.TWO_TWO
        assert Corner.TWO_TWO.side is Side.TWO
        with pytest.raises(ValueError):
            Corner.parse("12")
