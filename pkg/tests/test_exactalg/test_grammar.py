"""Tests for the text grammar."""

from fractions import Fraction

import pytest

from planelin.errors import ParseError
from planelin.exactalg import (
    QQ,
    BiPoly,
    FieldSpec,
    Mat2,
    ProjPoint,
    UniPoly,
    format_bipoly,
    format_mat2,
    format_matpoly,
    format_unipoly,
    parse_automorphism,
    parse_bipoly,
    parse_mat2,
    parse_matpoly,
    parse_point,
    parse_scalar,
    parse_unipoly,
)


class TestParsing:
    """Tests for parsing each kind of value."""

    def test_scalars(self) -> None:
        """Integers and fractions parse over Q."""
        assert parse_scalar("3", QQ) == 3
        assert parse_scalar("-7/2", QQ) == Fraction(-7, 2)

    def test_scalar_in_prime_field(self, f7: FieldSpec) -> None:
        """1/2 is read as 4 modulo 7."""
        assert parse_scalar("1/2", f7) == 4

    def test_unipoly(self) -> None:
        """Polynomials in t parse term by term."""
        assert parse_unipoly("t^3 - 2*t", QQ) == UniPoly(QQ, [0, -2, 0, 1])

    def test_bipoly_whitespace_insensitive(self) -> None:
        """Spacing around operators does not matter."""
        expected = BiPoly(QQ, {(2, 1): 1, (0, 0): 1})
        assert parse_bipoly("x^2*y + 1", QQ) == expected
        assert parse_bipoly("  x ^ 2 * y+1 ", QQ) == expected

    def test_matrices(self) -> None:
        """Constant and polynomial matrices parse from nested lists."""
        assert parse_mat2("[[1,1],[1,0]]", QQ) == Mat2(1, 1, 1, 0, QQ)
        g = parse_matpoly("[[1,0],[t,1]]", QQ)
        assert g.c == UniPoly.t(QQ)

    def test_point(self) -> None:
        """Points of P^1 parse to their canonical form."""
        assert parse_point("(2:4)", QQ) == ProjPoint.of(QQ, 1, 2)

    def test_automorphism(self) -> None:
        """A pair (f ; g) parses into its two components."""
        f, g = parse_automorphism("(x ; y + x^2)", QQ)
        assert f == BiPoly.x(QQ)
        assert g == BiPoly.y(QQ) + BiPoly.x(QQ) ** 2


class TestParseErrors:
    """Tests for offset-bearing parse errors."""

    def test_unknown_character_offset(self) -> None:
        """An unknown character is reported at its byte offset."""
        with pytest.raises(ParseError) as info:
            parse_unipoly("t + $", QQ)
        assert info.value.offset == 4

    def test_unknown_variable(self) -> None:
        """Only x and y are bivariate variables."""
        with pytest.raises(ParseError) as info:
            parse_bipoly("x + z", QQ)
        assert info.value.offset == 4

    def test_wrong_variable_for_unipoly(self) -> None:
        """Only t is a univariate variable."""
        with pytest.raises(ParseError):
            parse_unipoly("x + 1", QQ)

    def test_missing_separator(self) -> None:
        """Components are separated by a semicolon."""
        with pytest.raises(ParseError):
            parse_automorphism("(x , y)", QQ)

    def test_zero_point_rejected(self) -> None:
        """(0:0) is not a point."""
        with pytest.raises(ParseError):
            parse_point("(0:0)", QQ)

    def test_trailing_input(self) -> None:
        """Input after a complete value is an error."""
        with pytest.raises(ParseError):
            parse_scalar("3 3", QQ)

    def test_non_ascii_digit(self) -> None:
        """Non-ASCII digits are rejected at their offset."""
        with pytest.raises(ParseError) as info:
            parse_unipoly("t^٣", QQ)
        assert info.value.offset == 2
        with pytest.raises(ParseError) as info:
            parse_scalar("12٣", QQ)
        assert info.value.offset == 2


class TestFormatting:
    """Formatted values parse back to themselves."""

    def test_unipoly_round_trip(self) -> None:
        """A formatted polynomial in t parses back."""
        p = UniPoly(QQ, [Fraction(1, 2), 0, -3, 1])
        assert parse_unipoly(format_unipoly(p), QQ) == p

    def test_bipoly_round_trip(self) -> None:
        """A formatted polynomial in x, y parses back."""
        p = BiPoly(QQ, {(2, 1): -1, (0, 3): Fraction(2, 3), (0, 0): 5})
        assert parse_bipoly(format_bipoly(p), QQ) == p

    def test_matrix_text(self) -> None:
        """Matrices format without spaces."""
        assert format_mat2(Mat2(1, 0, -1, 1, QQ)) == "[[1,0],[-1,1]]"
        g = parse_matpoly("[[1,0],[t,1]]", QQ)
        assert format_matpoly(g) == "[[1,0],[t,1]]"
