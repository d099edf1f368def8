"""Dense univariate polynomials in ``t`` over an exact field."""

from __future__ import annotations

from collections.abc import Iterable

from planelin.exactalg.field import FieldSpec, Raw, Scalar

ZERO_DEGREE = -1
"""Degree reported for the zero polynomial (stands for minus infinity)."""


class UniPoly:
    """A polynomial ``c0 + c1 t + ... + cn t^n`` with raw coefficients.

    The coefficient list never ends in a zero, so the zero polynomial is the
    empty tuple and ``degree`` is :data:`ZERO_DEGREE`.
    """

    __slots__ = ("field", "coeffs")

    field: FieldSpec
    coeffs: tuple[Raw, ...]

    def __init__(self, field: FieldSpec, coeffs: Iterable[Raw | Scalar] = ()) -> None:
        values = [field.coerce(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.field = field
        self.coeffs = tuple(values)

    @classmethod
    def _make(cls, field: FieldSpec, values: list[Raw]) -> UniPoly:
        """Build from unreduced raw values without coercion checks."""
        reduced = [field.reduce(v) for v in values]
        while reduced and reduced[-1] == 0:
            reduced.pop()
        poly = cls.__new__(cls)
        poly.field = field
        poly.coeffs = tuple(reduced)
        return poly

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> UniPoly:
        return cls(field)

    @classmethod
    def one(cls, field: FieldSpec) -> UniPoly:
        return cls(field, [1])

    @classmethod
    def constant(cls, field: FieldSpec, value: Raw | Scalar) -> UniPoly:
        return cls(field, [value])

    @classmethod
    def t(cls, field: FieldSpec) -> UniPoly:
        return cls(field, [0, 1])

    @classmethod
    def monomial(cls, field: FieldSpec, value: Raw | Scalar, n: int) -> UniPoly:
        return cls(field, [0] * n + [value])

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Raw:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    @property
    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (:data:`ZERO_DEGREE` for zero)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return ZERO_DEGREE

    def coeff(self, n: int) -> Raw:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return self.field.zero

    def scalar_coeff(self, n: int) -> Scalar:
        return Scalar(self.coeff(n), self.field)

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def _other(self, other: UniPoly | Raw | Scalar) -> UniPoly:
        if isinstance(other, UniPoly):
            self.field.check(other.field)
            return other
        return UniPoly.constant(self.field, other)

    def __add__(self, other: UniPoly | Raw | Scalar) -> UniPoly:
        rhs = self._other(other)
        a, b = self.coeffs, rhs.coeffs
        if len(a) < len(b):
            a, b = b, a
        values = list(a)
        for i, c in enumerate(b):
            values[i] += c
        return UniPoly._make(self.field, values)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly._make(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: UniPoly | Raw | Scalar) -> UniPoly:
        return self + (-self._other(other))

    def __rsub__(self, other: Raw | Scalar) -> UniPoly:
        return self._other(other) - self

    def __mul__(self, other: UniPoly | Raw | Scalar) -> UniPoly:
        if not isinstance(other, UniPoly):
            return self.scale(self.field.coerce(other))
        self.field.check(other.field)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(self.field)
        values: list[Raw] = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                values[i + j] += ca * cb
        return UniPoly._make(self.field, values)

    __rmul__ = __mul__

    def scale(self, value: Raw) -> UniPoly:
        return UniPoly._make(self.field, [c * value for c in self.coeffs])

    def __pow__(self, n: int) -> UniPoly:
        if n < 0:
            raise ValueError("Negative powers of polynomials are not polynomials")
        result = UniPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, value: Raw | Scalar) -> Raw:
        """Evaluate at a field element (Horner)."""
        x = self.field.coerce(value)
        acc: Raw = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return self.field.reduce(acc)

    def compose(self, inner: UniPoly) -> UniPoly:
        """Return ``self(inner(t))``."""
        self.field.check(inner.field)
        acc = UniPoly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def dilate(self, factor: Raw) -> UniPoly:
        """Return ``self(factor * t)``."""
        values: list[Raw] = []
        power: Raw = 1
        for c in self.coeffs:
            values.append(c * power)
            power = power * factor
        return UniPoly._make(self.field, values)

    def shift_up(self, k: int) -> UniPoly:
        """Multiply by ``t^k``."""
        if self.is_zero:
            return self
        return UniPoly._make(self.field, [0] * k + list(self.coeffs))

    def shift_down(self, k: int) -> UniPoly:
        """Divide by ``t^k``; the ``k`` lowest coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError(f"Polynomial is not divisible by t^{k}")
        return UniPoly._make(self.field, list(self.coeffs[k:]))

    def truncate(self, n: int) -> UniPoly:
        """Drop every term of degree ``>= n``."""
        return UniPoly._make(self.field, list(self.coeffs[:n]))

    # ------------------------------------------------------------------
    # Equality
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        from planelin.exactalg.grammar import format_unipoly

        return f"UniPoly({format_unipoly(self)})"


def poly_compose(f: UniPoly, g: UniPoly) -> UniPoly:
    """Return ``f(g(t))``."""
    return f.compose(g)
