"""Tests for matrix classification and the reducibility hypotheses."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from planelin.errors import SingularMatrix
from planelin.exactalg import QQ, FieldSpec, Mat2
from planelin.linmap import (
    Classification,
    SubgroupSpec,
    check_hypothesis_QU,
    check_hypothesis_U,
    classify,
    is_k_reducible,
    quasi_order,
    quasi_order_bound,
)

U = Mat2(1, 1, 0, 1, QQ)
MINUS_ID = Mat2.scalar(QQ, -1)


class TestClassify:
    """Tests for ``classify`` over the rationals and F_p."""

    def test_unipotent(self) -> None:
        """U is reducible and unipotent."""
        result = classify(U)
        assert result.k_reducible and result.unipotent
        assert result.quasi_order == 1

    @pytest.mark.parametrize(
        ("entries", "order"),
        [
            ((-1, 0, 0, -1), 2),
            ((0, -1, 1, -1), 3),
            ((0, -1, 1, 0), 4),
            ((1, -1, 1, 0), 6),
        ],
    )
    def test_rational_quasi_orders(self, entries: tuple[int, ...], order: int) -> None:
        """Rational quasi-orders are 2, 3, 4 and 6."""
        result = classify(Mat2(*entries, QQ))
        assert result.quasi_unipotent
        assert result.quasi_order == order
        assert not result.unipotent

    def test_rotation_is_not_reducible_over_q(self) -> None:
        """The quarter turn has no rational eigenvalue."""
        assert not is_k_reducible(Mat2(0, -1, 1, 0, QQ))

    def test_hyperbolic_matrix(self) -> None:
        """diag(2, 1/2) is reducible but not quasi-unipotent."""
        result = classify(Mat2(2, 0, 0, Fraction(1, 2), QQ))
        assert result.k_reducible
        assert not result.quasi_unipotent
        assert result.quasi_order is None

    def test_rotation_splits_over_f5(self, f5: FieldSpec) -> None:
        """The quarter turn splits over F_5 with quasi-order 4."""
        result = classify(Mat2(0, -1, 1, 0, f5))
        assert result.k_reducible
        assert result.quasi_order == 4

    def test_every_element_of_f7_is_quasi_unipotent(self, f7: FieldSpec) -> None:
        """Quasi-orders over F_7 divide 48."""
        for m in (Mat2(3, 0, 0, 1, f7), Mat2(1, 2, 3, 5, f7), Mat2(0, 1, 1, 0, f7)):
            order = quasi_order(m)
            assert order is not None
            assert (7**2 - 1) % order == 0

    def test_singular(self) -> None:
        """Singular matrices are not classified."""
        with pytest.raises(SingularMatrix):
            classify(Mat2(1, 2, 2, 4, QQ))

    def test_inconsistent_record_rejected(self) -> None:
        """A unipotent record must have quasi-order 1."""
        with pytest.raises(ValidationError):
            Classification(k_reducible=True, unipotent=True, quasi_unipotent=True, quasi_order=2)


class TestHypotheses:
    """Bounded screens for the unipotent and quasi-unipotent hypotheses."""

    def test_unipotent_cyclic_group(self) -> None:
        """<U> satisfies the unipotent hypothesis."""
        s = SubgroupSpec.of(QQ, [U])
        assert check_hypothesis_U(s, 3).holds
        assert check_hypothesis_QU(s, 3).holds

    def test_diagonal_generator_is_a_counterexample(self) -> None:
        """diag(2, 1) is reducible but not unipotent."""
        s = SubgroupSpec.of(QQ, [Mat2(2, 0, 0, 1, QQ)])
        verdict = check_hypothesis_U(s, 2)
        assert not verdict.holds
        assert verdict.word == ["s1"]
        assert not check_hypothesis_QU(s, 2).holds

    def test_minus_identity_is_only_quasi_unipotent(self) -> None:
        """<-id, U> fails U and satisfies QU."""
        s = SubgroupSpec.of(QQ, [MINUS_ID, U])
        assert not check_hypothesis_U(s, 2).holds
        verdict = check_hypothesis_QU(s, 3)
        assert verdict.holds
        assert verdict.elements_checked == len(s.elements(3))

    def test_quasi_order_bound(self, f5: FieldSpec) -> None:
        """The bound is 12 over Q and p^2 - 1 over F_p."""
        assert quasi_order_bound(SubgroupSpec.of(QQ, [U])) == 12
        assert quasi_order_bound(SubgroupSpec.of(f5, [])) == 24
