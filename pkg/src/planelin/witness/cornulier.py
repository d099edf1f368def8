"""The square-zero representation of ``K[t] x| <tau>``.

Work in ``R = Q[[x]] + Q((x))/Q[[x]]`` where the product of two principal
parts is zero. Then

* ``rho1(f) = [[1, sum a_n x^(-n-1)], [0, 1]]`` for ``f = sum a_n binom(t, n)``;
* ``rho2(tau^alpha) = diag(1, (1 + x)^alpha)``;

and ``rho2(tau^-alpha) rho1(f) rho2(tau^alpha) = rho1(f(t + alpha))``. The
opposite order of conjugation yields ``f(t - alpha)``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from planelin.exactalg import QQ, UniPoly
from planelin.witness.models import CornulierCase, CornulierReport

logger = logging.getLogger(__name__)

ALPHAS: tuple[Fraction, ...] = (
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(1, 2),
    Fraction(-3, 5),
)


def binom(alpha: Fraction, k: int) -> Fraction:
    """The generalized binomial coefficient ``alpha (alpha - 1) ... / k!``."""
    out = Fraction(1)
    for i in range(k):
        out *= alpha - i
    return out / factorial(k)


def _binom_poly(n: int) -> UniPoly:
    """``binom(t, n)`` in the monomial basis."""
    out = UniPoly.one(QQ)
    for i in range(n):
        out = out * UniPoly(QQ, [-i, 1])
    return out.scale(Fraction(1, factorial(n)))


@dataclass(frozen=True, slots=True)
class BinomialPoly:
    """``sum a_n binom(t, n)``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = [Fraction(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def basis(cls, n: int) -> BinomialPoly:
        return cls((*(Fraction(0),) * n, Fraction(1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_monomial(cls, p: UniPoly) -> BinomialPoly:
        """Coefficients are the forward differences of ``p`` at zero."""
        values = [Fraction(p(n)) for n in range(max(p.degree, 0) + 1)]
        coeffs = []
        while values:
            coeffs.append(values[0])
            values = [b - a for a, b in zip(values, values[1:], strict=False)]
        return cls(tuple(coeffs))

    def to_monomial(self) -> UniPoly:
        out = UniPoly.zero(QQ)
        for n, a in enumerate(self.coeffs):
            if a:
                out = out + _binom_poly(n).scale(a)
        return out

    def shift(self, alpha: Fraction) -> BinomialPoly:
        """``f(t + alpha)``, re-expanded in the binomial basis."""
        moved = self.to_monomial().compose(UniPoly(QQ, [alpha, 1]))
        return BinomialPoly.from_monomial(moved)

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


# ----------------------------------------------------------------------
# The square-zero ring
# ----------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class SquareZeroElt:
    """``regular + singular``.

    ``regular`` is a power series known below degree ``order``; ``singular``
    maps a pole order ``k >= 1`` to the coefficient of ``x^-k``.
    """

    regular: UniPoly
    singular: tuple[tuple[int, Fraction], ...]
    order: int

    @classmethod
    def of(
        cls, regular: UniPoly, singular: Iterable[tuple[int, Fraction]], order: int
    ) -> SquareZeroElt:
        terms: dict[int, Fraction] = {}
        for k, c in singular:
            terms[k] = terms.get(k, Fraction(0)) + c
        return cls(
            regular.truncate(order),
            tuple(sorted((k, c) for k, c in terms.items() if c)),
            order,
        )

    @classmethod
    def scalar(cls, value: Fraction | int, order: int) -> SquareZeroElt:
        return cls.of(UniPoly.constant(QQ, value), (), order)

    @property
    def pole_order(self) -> int:
        return self.singular[-1][0] if self.singular else 0

    def __add__(self, other: SquareZeroElt) -> SquareZeroElt:
        return SquareZeroElt.of(
            self.regular + other.regular,
            (*self.singular, *other.singular),
            min(self.order, other.order),
        )

    def __mul__(self, other: SquareZeroElt) -> SquareZeroElt:
        order = min(self.order, other.order)
        if max(self.pole_order, other.pole_order) > order:
            raise ValueError("Series truncated below the pole order")
        singular = [
            *_principal_part(self.regular, other.singular),
            *_principal_part(other.regular, self.singular),
        ]
        return SquareZeroElt.of(self.regular * other.regular, singular, order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SquareZeroElt):
            return NotImplemented
        order = min(self.order, other.order)
        return (
            self.singular == other.singular
            and self.regular.truncate(order) == other.regular.truncate(order)
        )

    def __hash__(self) -> int:
        return hash(self.singular)


def _principal_part(
    regular: UniPoly, singular: Sequence[tuple[int, Fraction]]
) -> list[tuple[int, Fraction]]:
    """The negative-degree part of ``regular * singular``."""
    return [
        (k - j, c * Fraction(regular.coeff(j)))
        for k, c in singular
        for j in range(k)
        if regular.coeff(j)
    ]


@dataclass(frozen=True, slots=True)
class SquareZeroMatrix:
    a: SquareZeroElt
    b: SquareZeroElt
    c: SquareZeroElt
    d: SquareZeroElt

    def __mul__(self, other: SquareZeroMatrix) -> SquareZeroMatrix:
        return SquareZeroMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


def _order_for(f: BinomialPoly) -> int:
    return f.degree + 2


def cornulier_rho1(f: BinomialPoly, order: int | None = None) -> SquareZeroMatrix:
    order = order or _order_for(f)
    one, zero = SquareZeroElt.scalar(1, order), SquareZeroElt.scalar(0, order)
    corner = SquareZeroElt.of(
        UniPoly.zero(QQ), ((n + 1, a) for n, a in enumerate(f.coeffs)), order
    )
    return SquareZeroMatrix(one, corner, zero, one)


def cornulier_rho2(alpha: Fraction, order: int) -> SquareZeroMatrix:
    """``diag(1, (1 + x)^alpha)``, the binomial series known below degree ``order``."""
    series = UniPoly(QQ, [binom(alpha, k) for k in range(order)])
    one, zero = SquareZeroElt.scalar(1, order), SquareZeroElt.scalar(0, order)
    return SquareZeroMatrix(one, zero, zero, SquareZeroElt.of(series, (), order))


def verify_cornulier_identity(f: BinomialPoly, alpha: Fraction) -> bool:
    """``rho2(tau^-alpha) rho1(f) rho2(tau^alpha) == rho1(f(t + alpha))``."""
    order = _order_for(f)
    lhs = cornulier_rho2(-alpha, order) * cornulier_rho1(f, order) * cornulier_rho2(alpha, order)
    return lhs == cornulier_rho1(f.shift(alpha), order)


def verify_cornulier_literal(f: BinomialPoly, alpha: Fraction) -> bool:
    """``rho2(tau^alpha) rho1(f) rho2(tau^-alpha) == rho1(f(t - alpha))``."""
    order = _order_for(f)
    lhs = cornulier_rho2(alpha, order) * cornulier_rho1(f, order) * cornulier_rho2(-alpha, order)
    return lhs == cornulier_rho1(f.shift(-alpha), order)


def cornulier_grid(
    max_degree: int = 4, alphas: Sequence[Fraction] = ALPHAS
) -> CornulierReport:
    """Check the identity for ``f = binom(t, n)``, ``n <= max_degree``."""
    cases = [
        CornulierCase(
            f=str(f), alpha=str(alpha), passed=verify_cornulier_identity(f, alpha)
        )
        for f in (BinomialPoly.basis(n) for n in range(max_degree + 1))
        for alpha in alphas
    ]
    report = CornulierReport(cases=cases)
    logger.info("cornulier grid: %d cases, passed=%s", len(cases), report.passed)
    return report
