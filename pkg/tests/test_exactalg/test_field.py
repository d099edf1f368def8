"""Tests for base fields and scalars."""

import random
from fractions import Fraction

import pytest

from planelin.errors import FieldMismatch
from planelin.exactalg import QQ, FieldSpec, Scalar


class TestFieldSpec:
    """Tests for field construction, parsing and raw arithmetic."""

    def test_parse_flags(self) -> None:
        """``q`` and ``fp:<p>`` select the rationals and a prime field."""
        assert FieldSpec.parse("q") == QQ
        assert FieldSpec.parse("fp:7") == FieldSpec.prime(7)
        assert FieldSpec.parse("fp:7").flag == "fp:7"

    def test_composite_modulus_rejected(self) -> None:
        """A composite modulus is a programming error."""
        with pytest.raises(ValueError):
            FieldSpec.prime(9)

    def test_unknown_flag_rejected(self) -> None:
        """Only q and fp:<p> are field flags."""
        with pytest.raises(ValueError):
            FieldSpec.parse("r")

    def test_coerce_fraction_into_prime_field(self, f7: FieldSpec) -> None:
        """1/2 is the inverse of 2 modulo 7."""
        assert f7.coerce(Fraction(1, 2)) == 4

    def test_inverse_of_zero_raises(self, f5: FieldSpec) -> None:
        """Zero has no inverse."""
        with pytest.raises(ZeroDivisionError):
            f5.inv(0)

    def test_elements_of_prime_field(self, f3: FieldSpec) -> None:
        """F_3 enumerates as 0, 1, 2."""
        assert list(f3.elements()) == [0, 1, 2]

    def test_squares_modulo_seven(self, f7: FieldSpec) -> None:
        """The nonzero squares modulo 7 are 1, 2 and 4."""
        assert {v for v in range(1, 7) if f7.is_square(v)} == {1, 2, 4}


class TestScalar:
    """Tests for the public scalar wrapper."""

    @pytest.mark.parametrize("flag", ["q", "fp:7", "fp:2"])
    def test_field_axioms_on_random_triples(self, flag: str, rng: random.Random) -> None:
        """Associativity, distributivity and inverses hold exactly."""
        field = FieldSpec.parse(flag)
        span = 20 if field.is_rational else field.p
        for _ in range(50):
            a, b, c = (Scalar(rng.randrange(-span, span), field) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            if not a.is_zero:
                assert a * a.inverse() == 1

    def test_mixed_fields_rejected(self, f5: FieldSpec, f7: FieldSpec) -> None:
        """Scalars over different fields do not mix."""
        with pytest.raises(FieldMismatch):
            Scalar(1, f5) + Scalar(1, f7)

    def test_rational_division(self) -> None:
        """Division over Q stays exact."""
        assert Scalar(1, QQ) / 3 == Fraction(1, 3)
        assert str(Scalar(Fraction(-7, 2), QQ)) == "-7/2"

    def test_powers_in_prime_field(self, f5: FieldSpec) -> None:
        """Fermat: a^4 = 1 for nonzero a modulo 5."""
        assert all(Scalar(a, f5) ** 4 == 1 for a in range(1, 5))
