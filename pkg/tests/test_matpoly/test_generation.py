"""Tests for the E_delta generation algorithm, GL_1 membership and ping-pong."""

import random

import pytest

from planelin.errors import BadShape, NotInGL1, ZeroVector
from planelin.exactalg import (
    QQ,
    FieldSpec,
    Mat2,
    MatPoly2,
    ProjPoint,
    UniPoly,
    e_delta,
    parse_matpoly,
)
from planelin.matpoly import (
    EFactor,
    EWord,
    PolyVector,
    apply_factor,
    bracket,
    e_generation_factorize,
    generation_steps,
    is_in_GL1,
    merge_efactors,
    omega_member,
    pingpong_grid,
    vector_degree,
    vector_hc,
    verify_pingpong,
)
from planelin.sampling import random_e_word


def point(a: int, b: int, field: FieldSpec = QQ) -> ProjPoint:
    return ProjPoint.of(field, a, b)


ONE = UniPoly.one(QQ)

# ------------------------------------------------------------------
# Membership and the bracket
# ------------------------------------------------------------------


class TestMembership:
    """Tests for ``is_in_GL1``."""

    def test_unipotent_lower(self) -> None:
        """[[1,0],[t,1]] is in GL_1."""
        assert is_in_GL1(parse_matpoly("[[1,0],[t,1]]", QQ))

    def test_determinant_not_one(self) -> None:
        """A determinant other than 1 is rejected."""
        assert not is_in_GL1(parse_matpoly("[[1 + t,0],[0,1]]", QQ))

    def test_constant_term_not_identity(self) -> None:
        """The constant term must be the identity."""
        assert not is_in_GL1(parse_matpoly("[[1,1],[0,1]]", QQ))

    def test_e_factor_matrices_are_members(self, f5: FieldSpec) -> None:
        """Every E_delta(f) over F_5 is in GL_1."""
        for delta in ProjPoint.enumerate(f5):
            assert is_in_GL1(EFactor(delta, UniPoly(f5, [2, 1])).matrix())


class TestBracket:
    """Tests for ``bracket``."""

    def test_identity_with_itself(self) -> None:
        """<id, id> is the trace of id, which is 2."""
        assert bracket(Mat2.identity(QQ), Mat2.identity(QQ)) == 2

    def test_square_zero_matrix_with_itself(self) -> None:
        """e_delta is isotropic."""
        e = e_delta(point(1, 3))
        assert bracket(e, e) == 0

    def test_two_lines(self) -> None:
        """<e_(0:1), e_(1:0)> = -1."""
        assert bracket(e_delta(point(0, 1)), e_delta(point(1, 0))) == -1

    def test_symmetric(self) -> None:
        """The bracket is symmetric."""
        a, b = Mat2(1, 2, 3, 4, QQ), Mat2(0, 5, -1, 2, QQ)
        assert bracket(a, b) == bracket(b, a)


# ------------------------------------------------------------------
# Generation
# ------------------------------------------------------------------


class TestEFactor:
    """Tests for ``EFactor`` and ``EWord``."""

    def test_matrix(self) -> None:
        """E_delta(1) is id + t e_delta."""
        assert EFactor(point(0, 1), ONE).matrix() == parse_matpoly("[[1,0],[t,1]]", QQ)
        assert EFactor(point(1, 0), ONE).matrix() == parse_matpoly("[[1,t],[0,1]]", QQ)

    def test_zero_polynomial_rejected(self) -> None:
        """A factor needs a nonzero polynomial."""
        with pytest.raises(BadShape):
            EFactor(point(0, 1), UniPoly.zero(QQ))

    def test_factors_on_one_line_add(self) -> None:
        """e_delta^2 = 0 makes E_delta(f) E_delta(g) = E_delta(f + g)."""
        delta = point(1, 2)
        f, g = UniPoly(QQ, [1, 2]), UniPoly(QQ, [0, -1, 3])
        product = EFactor(delta, f).matrix() * EFactor(delta, g).matrix()
        assert product == EFactor(delta, f + g).matrix()
        assert merge_efactors([EFactor(delta, f), EFactor(delta, -f)]) == []

    def test_adjacent_equal_lines_rejected(self) -> None:
        """A word never repeats a line."""
        with pytest.raises(BadShape):
            EWord(QQ, (EFactor(point(0, 1), ONE), EFactor(point(0, 1), ONE)))


class TestGeneration:
    """Tests for ``e_generation_factorize``."""

    def test_identity(self) -> None:
        """The identity gives the empty word."""
        assert e_generation_factorize(MatPoly2.identity(QQ)).length == 0

    def test_single_factor(self) -> None:
        """[[1,0],[t,1]] is E_(0:1)(1)."""
        word = e_generation_factorize(parse_matpoly("[[1,0],[t,1]]", QQ))
        assert word.factors == (EFactor(point(0, 1), ONE),)

    def test_product_of_two_lines(self) -> None:
        """A product of two factors is recovered in order."""
        g = parse_matpoly("[[1,t],[t,t^2 + 1]]", QQ)
        word = e_generation_factorize(g)
        assert word.factors == (EFactor(point(0, 1), ONE), EFactor(point(1, 0), ONE))
        assert word.recompose() == g

    def test_steps_lower_the_degree(self) -> None:
        """Each step strictly lowers the degree."""
        g = EWord(
            QQ,
            (
                EFactor(point(1, 1), UniPoly(QQ, [1, 1])),
                EFactor(point(0, 1), UniPoly(QQ, [0, 2])),
                EFactor(point(1, -1), ONE),
            ),
        ).recompose()
        degrees = [degree for degree, _ in generation_steps(g)]
        assert degrees == sorted(degrees, reverse=True)
        assert len(set(degrees)) == len(degrees)

    def test_not_in_gl1(self) -> None:
        """Matrices outside GL_1 are rejected."""
        with pytest.raises(NotInGL1):
            e_generation_factorize(parse_matpoly("[[1,1],[0,1]]", QQ))

    @pytest.mark.parametrize("flag", ["q", "fp:3", "fp:5"])
    def test_recovers_random_words(self, flag: str, rng: random.Random) -> None:
        """The reduced word in the E_delta is unique."""
        field = FieldSpec.parse(flag)
        for _ in range(10):
            word = random_e_word(field, rng, rng.randint(1, 4))
            found = e_generation_factorize(word.recompose())
            assert found.factors == word.factors


# ------------------------------------------------------------------
# Ping-pong
# ------------------------------------------------------------------


class TestPingPong:
    """Tests for highest components and the ping-pong check."""

    def test_omega_membership(self) -> None:
        """Degree and highest component place v in Omega_(1:2)."""
        v = PolyVector(UniPoly(QQ, [1, 2]), UniPoly(QQ, [0, 4]))
        assert v.degree == 1
        assert v.hc == (2, 4)
        assert (vector_degree(v), vector_hc(v)) == (v.degree, v.hc)
        assert omega_member(v, point(1, 2))
        assert not omega_member(v, point(0, 1))

    def test_zero_vector_rejected(self) -> None:
        """The zero vector has no degree."""
        with pytest.raises(ZeroVector):
            PolyVector(UniPoly.zero(QQ), UniPoly.zero(QQ))

    def test_factor_moves_vector_onto_its_line(self) -> None:
        """E_(0:1)(1) sends (1, 0) into Omega_(0:1)."""
        v = PolyVector(ONE, UniPoly.zero(QQ))
        image = apply_factor(EFactor(point(0, 1), ONE), v)
        assert image.degree == 1
        assert omega_member(image, point(0, 1))

    def test_grid_over_f3(self, f3: FieldSpec, rng: random.Random) -> None:
        """Every sample maps every admissible vector correctly over F_3."""
        samples, vectors = pingpong_grid(f3, 3, 3, rng)
        report = verify_pingpong(samples, vectors)
        assert report.passed
        assert report.checked == 4 * 3 * 3 * 3
        assert report.skipped == 4 * 3 * 3

    def test_grid_needs_finite_field(self, rng: random.Random) -> None:
        """The exhaustive grid needs a finite field."""
        with pytest.raises(ValueError):
            pingpong_grid(QQ, 1, 1, rng)

    def test_misfiled_factor_rejected(self, f3: FieldSpec, rng: random.Random) -> None:
        """A factor filed under the wrong line raises."""
        samples, vectors = pingpong_grid(f3, 1, 1, rng)
        wrong = ProjPoint.of(f3, 0, 1)
        other = next(delta for delta in samples if delta != wrong)
        with pytest.raises(BadShape):
            verify_pingpong({wrong: samples[other]}, vectors)
