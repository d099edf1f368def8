"""2x2 matrices over K and over K[t], and square block matrices over K[t]."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from planelin.errors import BadShape, SingularMatrix
from planelin.exactalg.field import FieldSpec, Raw, Scalar
from planelin.exactalg.unipoly import ZERO_DEGREE, UniPoly

Vector = tuple[Raw, Raw]


@dataclass(frozen=True, slots=True)
class Mat2:
    """The matrix ``[[a, b], [c, d]]`` acting on column vectors."""

    a: Raw
    b: Raw
    c: Raw
    d: Raw
    field: FieldSpec

    def __post_init__(self) -> None:
        coerce = self.field.coerce
        object.__setattr__(self, "a", coerce(self.a))
        object.__setattr__(self, "b", coerce(self.b))
        object.__setattr__(self, "c", coerce(self.c))
        object.__setattr__(self, "d", coerce(self.d))

    @classmethod
    def of(cls, field: FieldSpec, rows: Sequence[Sequence[Raw | Scalar]]) -> Mat2:
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise BadShape("Expected a 2x2 matrix")
        (a, b), (c, d) = rows
        return cls(field.coerce(a), field.coerce(b), field.coerce(c), field.coerce(d), field)

    @classmethod
    def identity(cls, field: FieldSpec) -> Mat2:
        return cls(1, 0, 0, 1, field)

    @classmethod
    def scalar(cls, field: FieldSpec, value: Raw) -> Mat2:
        return cls(value, 0, 0, value, field)

    @classmethod
    def zero(cls, field: FieldSpec) -> Mat2:
        return cls(0, 0, 0, 0, field)

    @property
    def rows(self) -> tuple[tuple[Raw, Raw], tuple[Raw, Raw]]:
        return ((self.a, self.b), (self.c, self.d))

    @property
    def determinant(self) -> Raw:
        return self.field.reduce(self.a * self.d - self.b * self.c)

    @property
    def trace(self) -> Raw:
        return self.field.reduce(self.a + self.d)

    def det(self) -> Scalar:
        return Scalar(self.determinant, self.field)

    @property
    def is_identity(self) -> bool:
        return self.a == 1 and self.b == 0 and self.c == 0 and self.d == 1

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    @property
    def is_scalar(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    @property
    def is_lower_triangular(self) -> bool:
        return self.b == 0

    @property
    def is_upper_triangular(self) -> bool:
        return self.c == 0

    @property
    def rank(self) -> int:
        if self.is_zero:
            return 0
        return 2 if self.determinant != 0 else 1

    def column(self, j: int) -> Vector:
        return (self.a, self.c) if j == 0 else (self.b, self.d)

    def __mul__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        self.field.check(other.field)
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.field,
        )

    def __add__(self, other: Mat2) -> Mat2:
        self.field.check(other.field)
        return Mat2(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d, self.field
        )

    def __sub__(self, other: Mat2) -> Mat2:
        self.field.check(other.field)
        return Mat2(
            self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d, self.field
        )

    def __neg__(self) -> Mat2:
        return Mat2(-self.a, -self.b, -self.c, -self.d, self.field)

    def scale(self, value: Raw) -> Mat2:
        return Mat2(self.a * value, self.b * value, self.c * value, self.d * value, self.field)

    def inverse(self) -> Mat2:
        det = self.determinant
        if det == 0:
            raise SingularMatrix(f"Matrix {self} is singular")
        inv = self.field.inv(det)
        return Mat2(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv, self.field)

    def __pow__(self, n: int) -> Mat2:
        base = self.inverse() if n < 0 else self
        n = abs(n)
        result = Mat2.identity(self.field)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def apply(self, vector: Vector) -> Vector:
        x, y = vector
        reduce = self.field.reduce
        return (reduce(self.a * x + self.b * y), reduce(self.c * x + self.d * y))

    def __str__(self) -> str:
        from planelin.exactalg.grammar import format_mat2

        return format_mat2(self)


def mat_mul(m: Mat2, n: Mat2) -> Mat2:
    return m * n


def mat_det(m: Mat2) -> Scalar:
    return m.det()


def mat_inv(m: Mat2) -> Mat2:
    return m.inverse()


@dataclass(frozen=True, slots=True)
class MatPoly2:
    """A 2x2 matrix with entries in K[t], ``G(t) = sum A_n t^n``."""

    a: UniPoly
    b: UniPoly
    c: UniPoly
    d: UniPoly

    def __post_init__(self) -> None:
        for entry in (self.b, self.c, self.d):
            self.a.field.check(entry.field)

    @property
    def field(self) -> FieldSpec:
        return self.a.field

    @classmethod
    def constant(cls, m: Mat2) -> MatPoly2:
        f = m.field
        return cls(
            UniPoly._make(f, [m.a]),
            UniPoly._make(f, [m.b]),
            UniPoly._make(f, [m.c]),
            UniPoly._make(f, [m.d]),
        )

    @classmethod
    def identity(cls, field: FieldSpec) -> MatPoly2:
        return cls.constant(Mat2.identity(field))

    @classmethod
    def from_coefficients(cls, field: FieldSpec, coefficients: Sequence[Mat2]) -> MatPoly2:
        """Assemble ``sum_n coefficients[n] t^n``."""
        return cls(
            UniPoly._make(field, [m.a for m in coefficients]),
            UniPoly._make(field, [m.b for m in coefficients]),
            UniPoly._make(field, [m.c for m in coefficients]),
            UniPoly._make(field, [m.d for m in coefficients]),
        )

    @property
    def entries(self) -> tuple[UniPoly, UniPoly, UniPoly, UniPoly]:
        return (self.a, self.b, self.c, self.d)

    @property
    def degree(self) -> int:
        return max(e.degree for e in self.entries)

    @property
    def is_identity(self) -> bool:
        return self == MatPoly2.identity(self.field)

    def coefficient(self, n: int) -> Mat2:
        """The constant matrix ``A_n`` multiplying ``t^n``."""
        return Mat2(
            self.a.coeff(n), self.b.coeff(n), self.c.coeff(n), self.d.coeff(n), self.field
        )

    def eval0(self) -> Mat2:
        return self.coefficient(0)

    def det(self) -> UniPoly:
        return self.a * self.d - self.b * self.c

    def _lift(self, other: MatPoly2 | Mat2) -> MatPoly2:
        return MatPoly2.constant(other) if isinstance(other, Mat2) else other

    def __mul__(self, other: MatPoly2 | Mat2) -> MatPoly2:
        rhs = self._lift(other)
        return MatPoly2(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )

    def __rmul__(self, other: Mat2) -> MatPoly2:
        return MatPoly2.constant(other) * self

    def __add__(self, other: MatPoly2 | Mat2) -> MatPoly2:
        rhs = self._lift(other)
        return MatPoly2(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c, self.d + rhs.d)

    def __sub__(self, other: MatPoly2 | Mat2) -> MatPoly2:
        rhs = self._lift(other)
        return MatPoly2(self.a - rhs.a, self.b - rhs.b, self.c - rhs.c, self.d - rhs.d)

    def scale(self, p: UniPoly) -> MatPoly2:
        """Multiply every entry by the polynomial ``p``."""
        return MatPoly2(self.a * p, self.b * p, self.c * p, self.d * p)

    def apply(self, vector: tuple[UniPoly, UniPoly]) -> tuple[UniPoly, UniPoly]:
        x, y = vector
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def __str__(self) -> str:
        from planelin.exactalg.grammar import format_matpoly

        return format_matpoly(self)


def matpoly_mul(m: MatPoly2, n: MatPoly2) -> MatPoly2:
    return m * n


def matpoly_eval0(m: MatPoly2) -> Mat2:
    return m.eval0()


@dataclass(frozen=True, slots=True)
class BlockMatPoly:
    """A square matrix over K[t] built from 2x2 blocks."""

    blocks: tuple[tuple[MatPoly2, ...], ...]

    def __post_init__(self) -> None:
        k = len(self.blocks)
        if k == 0 or any(len(row) != k for row in self.blocks):
            raise BadShape("Block matrix must be a non-empty square grid")

    @property
    def field(self) -> FieldSpec:
        return self.blocks[0][0].field

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @property
    def size(self) -> int:
        return 2 * len(self.blocks)

    def block(self, i: int, j: int) -> MatPoly2:
        return self.blocks[i][j]

    def is_zero_block(self, i: int, j: int) -> bool:
        return all(e.is_zero for e in self.blocks[i][j].entries)

    def __mul__(self, other: BlockMatPoly) -> BlockMatPoly:
        k = self.block_count
        if other.block_count != k:
            raise BadShape("Block matrices of different sizes")
        zero = MatPoly2.constant(Mat2.zero(self.field))
        rows = []
        for i in range(k):
            row = []
            for j in range(k):
                acc = zero
                for m in range(k):
                    if self.is_zero_block(i, m) or other.is_zero_block(m, j):
                        continue
                    acc = acc + self.blocks[i][m] * other.blocks[m][j]
                row.append(acc)
            rows.append(tuple(row))
        return BlockMatPoly(tuple(rows))

    def entry(self, i: int, j: int) -> UniPoly:
        """Scalar-level entry ``(i, j)`` of the full ``2k x 2k`` matrix."""
        block = self.blocks[i // 2][j // 2]
        return block.entries[2 * (i % 2) + (j % 2)]

    @property
    def degree(self) -> int:
        return max(
            (b.degree for row in self.blocks for b in row), default=ZERO_DEGREE
        )
