"""Exact base fields: the rationals and prime fields.

Elements are kept in a *raw* form inside polynomials and matrices
(:class:`fractions.Fraction` for the rationals, ``int`` residues in
``[0, p)`` for prime fields). :class:`FieldSpec` owns the arithmetic on raw
elements, in the manner of a computer-algebra domain object;
:class:`Scalar` wraps a raw element with its field for the public API.
"""

from __future__ import annotations

import math
from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

import sympy
from sympy.ntheory import is_quad_residue

from planelin.errors import FieldMismatch

Raw = int | Fraction


class FieldKind(StrEnum):
    RATIONALS = "rationals"
    PRIME = "prime"


@dataclass(frozen=True, slots=True)
class FieldSpec:
    """The field K: either the rationals or the prime field of order ``p``."""

    kind: FieldKind
    p: int = 0

    def __post_init__(self) -> None:
        if self.kind is FieldKind.PRIME:
            if not sympy.isprime(self.p):
                raise ValueError(f"Modulus {self.p} is not prime")
        elif self.p != 0:
            raise ValueError("The rationals carry no modulus")

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(FieldKind.PRIME, p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse a CLI field flag: ``q`` or ``fp:<p>``."""
        flag = text.strip().lower()
        if flag in ("q", "qq", "rationals"):
            return cls.rationals()
        if flag.startswith("fp:"):
            digits = flag[3:]
            if digits.isdigit():
                return cls.prime(int(digits))
        raise ValueError(f"Unknown field flag {text!r} (expected q or fp:<p>)")

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.kind is FieldKind.RATIONALS

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def flag(self) -> str:
        """The CLI spelling of the field."""
        return "q" if self.is_rational else f"fp:{self.p}"

    @property
    def zero(self) -> Raw:
        return Fraction(0) if self.is_rational else 0

    @property
    def one(self) -> Raw:
        return Fraction(1) if self.is_rational else 1

    def __str__(self) -> str:
        return "Q" if self.is_rational else f"F_{self.p}"

    # ------------------------------------------------------------------
    # Raw element arithmetic
    # ------------------------------------------------------------------

    def coerce(self, value: Raw | Scalar) -> Raw:
        """Map an integer, fraction or scalar into the raw form of this field."""
        if isinstance(value, Scalar):
            self.check(value.field)
            return value.value
        if self.is_rational:
            return value if type(value) is Fraction else Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(
                    f"Denominator {value.denominator} vanishes in {self}"
                )
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def reduce(self, value: Raw) -> Raw:
        """Canonicalize the result of ring operations on raw elements."""
        if self.is_rational:
            return value if type(value) is Fraction else Fraction(value)
        return value % self.p

    def inv(self, value: Raw) -> Raw:
        if value == 0:
            raise ZeroDivisionError(f"Inverse of zero in {self}")
        if self.is_rational:
            return 1 / Fraction(value)
        return pow(value, -1, self.p)

    def div(self, a: Raw, b: Raw) -> Raw:
        return self.reduce(a * self.inv(b))

    def neg(self, value: Raw) -> Raw:
        return self.reduce(-value)

    def power(self, value: Raw, n: int) -> Raw:
        if n < 0:
            return self.power(self.inv(value), -n)
        if self.is_rational:
            return Fraction(value) ** n
        return pow(value, n, self.p)

    def is_square(self, value: Raw) -> bool:
        """Whether ``value`` is a square in this field."""
        if value == 0:
            return True
        if self.is_rational:
            q = Fraction(value)
            if q < 0:
                return False
            num, den = q.numerator, q.denominator
            return math.isqrt(num) ** 2 == num and math.isqrt(den) ** 2 == den
        if self.p == 2:
            return True
        return bool(is_quad_residue(int(value), self.p))

    def elements(self) -> Iterator[Raw]:
        """Enumerate a prime field in residue order."""
        if self.is_rational:
            raise ValueError("The rationals cannot be enumerated")
        return iter(range(self.p))

    def check(self, other: FieldSpec) -> None:
        """Raise :class:`FieldMismatch` unless ``other`` is this field."""
        if other is not self and other != self:
            raise FieldMismatch(f"Field mismatch: {self} vs {other}")

    def format(self, value: Raw) -> str:
        if self.is_rational:
            q = Fraction(value)
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
        return str(value)

    def scalar(self, value: Raw) -> Scalar:
        return Scalar(value, self)


QQ = FieldSpec.rationals()


@dataclass(frozen=True, slots=True, eq=False)
class Scalar:
    """An exact element of ``field``.

    Rationals are held in lowest terms, residues in ``[0, p)``. Arithmetic
    accepts plain ``int`` and ``Fraction`` operands, coerced into the field.
    """

    value: Raw
    field: FieldSpec

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def _lift(self, other: object) -> Raw | None:
        if isinstance(other, Scalar):
            self.field.check(other.field)
            return other.value
        if isinstance(other, int | Fraction):
            return self.field.coerce(other)
        return None

    def _new(self, value: Raw) -> Scalar:
        return Scalar(self.field.reduce(value), self.field)

    def __add__(self, other: object) -> Scalar:
        raw = self._lift(other)
        if raw is None:
            return NotImplemented
        return self._new(self.value + raw)

    __radd__ = __add__

    def __sub__(self, other: object) -> Scalar:
        raw = self._lift(other)
        if raw is None:
            return NotImplemented
        return self._new(self.value - raw)

    def __rsub__(self, other: object) -> Scalar:
        raw = self._lift(other)
        if raw is None:
            return NotImplemented
        return self._new(raw - self.value)

    def __mul__(self, other: object) -> Scalar:
        raw = self._lift(other)
        if raw is None:
            return NotImplemented
        return self._new(self.value * raw)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Scalar:
        raw = self._lift(other)
        if raw is None:
            return NotImplemented
        return self._new(self.field.div(self.value, raw))

    def __rtruediv__(self, other: object) -> Scalar:
        raw = self._lift(other)
        if raw is None:
            return NotImplemented
        return self._new(self.field.div(raw, self.value))

    def __neg__(self) -> Scalar:
        return self._new(-self.value)

    def __pow__(self, n: int) -> Scalar:
        return self._new(self.field.power(self.value, n))

    def inverse(self) -> Scalar:
        return self._new(self.field.inv(self.value))

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int | Fraction):
            try:
                return self.value == self.field.coerce(other)
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field))

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self}, {self.field})"
