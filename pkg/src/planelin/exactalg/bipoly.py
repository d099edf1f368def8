"""Sparse bivariate polynomials in ``x`` and ``y``."""

from __future__ import annotations

from collections.abc import Iterator, Mapping

from planelin.exactalg.field import FieldSpec, Raw, Scalar
from planelin.exactalg.unipoly import ZERO_DEGREE, UniPoly

Monomial = tuple[int, int]


def _accumulate_product(
    acc: dict[Monomial, Raw],
    left: Mapping[Monomial, Raw],
    right: Mapping[Monomial, Raw],
    weight: Raw = 1,
) -> None:
    """Add ``weight * left * right`` into ``acc`` without reducing."""
    for (i1, j1), c1 in left.items():
        c1w = c1 * weight
        for (i2, j2), c2 in right.items():
            key = (i1 + i2, j1 + j2)
            acc[key] = acc.get(key, 0) + c1w * c2


class BiPoly:
    """A polynomial in ``x`` and ``y`` stored as ``{(i, j): coefficient}``.

    No zero coefficient is ever stored; the zero polynomial has no terms and
    total degree :data:`ZERO_DEGREE`.
    """

    __slots__ = ("field", "_terms", "_hash")

    field: FieldSpec
    _terms: dict[Monomial, Raw]
    _hash: int | None

    def __init__(
        self, field: FieldSpec, terms: Mapping[Monomial, Raw | Scalar] | None = None
    ) -> None:
        self.field = field
        self._terms = {}
        self._hash = None
        for (i, j), value in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"Negative exponent in monomial {(i, j)}")
            c = field.coerce(value)
            if c != 0:
                self._terms[(i, j)] = c

    @classmethod
    def _make(cls, field: FieldSpec, acc: Mapping[Monomial, Raw]) -> BiPoly:
        """Build from unreduced raw values without validation."""
        poly = cls.__new__(cls)
        poly.field = field
        poly._hash = None
        terms: dict[Monomial, Raw] = {}
        for key, value in acc.items():
            c = field.reduce(value)
            if c != 0:
                terms[key] = c
        poly._terms = terms
        return poly

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> BiPoly:
        return cls(field)

    @classmethod
    def constant(cls, field: FieldSpec, value: Raw | Scalar) -> BiPoly:
        return cls(field, {(0, 0): value})

    @classmethod
    def x(cls, field: FieldSpec) -> BiPoly:
        return cls(field, {(1, 0): 1})

    @classmethod
    def y(cls, field: FieldSpec) -> BiPoly:
        return cls(field, {(0, 1): 1})

    @classmethod
    def monomial(cls, field: FieldSpec, value: Raw | Scalar, i: int, j: int) -> BiPoly:
        return cls(field, {(i, j): value})

    @classmethod
    def linear(cls, field: FieldSpec, a: Raw, b: Raw, c: Raw = 0) -> BiPoly:
        """Return ``a x + b y + c``."""
        return cls(field, {(1, 0): a, (0, 1): b, (0, 0): c})

    @classmethod
    def from_unipoly(cls, poly: UniPoly, var: str = "x") -> BiPoly:
        """Embed a polynomial in ``t`` as a polynomial in ``x`` or ``y``."""
        if var == "x":
            terms = {(n, 0): c for n, c in enumerate(poly.coeffs)}
        elif var == "y":
            terms = {(0, n): c for n, c in enumerate(poly.coeffs)}
        else:
            raise ValueError(f"Unknown variable {var!r}")
        return cls._make(poly.field, terms)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Raw]:
        return self._terms

    def items(self) -> Iterator[tuple[Monomial, Raw]]:
        """Terms by decreasing total degree, then decreasing power of ``x``."""
        return iter(sorted(self._terms.items(), key=lambda kv: (-sum(kv[0]), -kv[0][0])))

    def coeff(self, i: int, j: int) -> Raw:
        return self._terms.get((i, j), self.field.zero)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def total_degree(self) -> int:
        if not self._terms:
            return ZERO_DEGREE
        return max(i + j for i, j in self._terms)

    @property
    def degree_in_x(self) -> int:
        return max((i for i, _ in self._terms), default=ZERO_DEGREE)

    @property
    def degree_in_y(self) -> int:
        return max((j for _, j in self._terms), default=ZERO_DEGREE)

    @property
    def constant_term(self) -> Raw:
        return self.coeff(0, 0)

    def homogeneous_part(self, degree: int) -> BiPoly:
        return BiPoly._make(
            self.field, {k: c for k, c in self._terms.items() if k[0] + k[1] == degree}
        )

    def leading_form(self) -> BiPoly:
        """The homogeneous component of top total degree."""
        return self.homogeneous_part(self.total_degree)

    def to_unipoly(self) -> UniPoly:
        """View a polynomial in ``x`` alone as a polynomial in ``t``."""
        if self.degree_in_y > 0:
            raise ValueError("Polynomial depends on y")
        values: list[Raw] = [0] * (self.degree_in_x + 1)
        for (i, _), c in self._terms.items():
            values[i] = c
        return UniPoly._make(self.field, values)

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def _other(self, other: BiPoly | Raw | Scalar) -> BiPoly:
        if isinstance(other, BiPoly):
            self.field.check(other.field)
            return other
        return BiPoly.constant(self.field, other)

    def __add__(self, other: BiPoly | Raw | Scalar) -> BiPoly:
        rhs = self._other(other)
        acc = dict(self._terms)
        for key, c in rhs._terms.items():
            acc[key] = acc.get(key, 0) + c
        return BiPoly._make(self.field, acc)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly._make(self.field, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: BiPoly | Raw | Scalar) -> BiPoly:
        rhs = self._other(other)
        acc = dict(self._terms)
        for key, c in rhs._terms.items():
            acc[key] = acc.get(key, 0) - c
        return BiPoly._make(self.field, acc)

    def __rsub__(self, other: Raw | Scalar) -> BiPoly:
        return self._other(other) - self

    def __mul__(self, other: BiPoly | Raw | Scalar) -> BiPoly:
        if not isinstance(other, BiPoly):
            return self.scale(self.field.coerce(other))
        self.field.check(other.field)
        acc: dict[Monomial, Raw] = {}
        _accumulate_product(acc, self._terms, other._terms)
        return BiPoly._make(self.field, acc)

    __rmul__ = __mul__

    def scale(self, value: Raw) -> BiPoly:
        return BiPoly._make(self.field, {k: c * value for k, c in self._terms.items()})

    def __pow__(self, n: int) -> BiPoly:
        if n < 0:
            raise ValueError("Negative powers of polynomials are not polynomials")
        result = BiPoly.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def powers(self, n: int) -> list[BiPoly]:
        """Return ``[1, self, self^2, ..., self^n]``."""
        out = [BiPoly.constant(self.field, 1)]
        for _ in range(n):
            out.append(out[-1] * self)
        return out

    def subst(self, u: BiPoly, v: BiPoly) -> BiPoly:
        """Return ``self(u, v)``, substituting ``x -> u`` and ``y -> v``."""
        self.field.check(u.field)
        self.field.check(v.field)
        if not self._terms:
            return self
        return self.subst_powers(u.powers(self.degree_in_x), v.powers(self.degree_in_y))

    def subst_powers(self, upow: list[BiPoly], vpow: list[BiPoly]) -> BiPoly:
        """Substitute using precomputed power lists of the images of x and y."""
        if not self._terms:
            return self
        rows: dict[int, dict[int, Raw]] = {}
        for (i, j), c in self._terms.items():
            rows.setdefault(j, {})[i] = c
        acc: dict[Monomial, Raw] = {}
        for j, row in rows.items():
            inner: dict[Monomial, Raw] = {}
            for i, c in row.items():
                for key, value in upow[i]._terms.items():
                    inner[key] = inner.get(key, 0) + c * value
            _accumulate_product(acc, inner, vpow[j]._terms)
        return BiPoly._make(self.field, acc)

    def evaluate(self, a: Raw | Scalar, b: Raw | Scalar) -> Raw:
        x = self.field.coerce(a)
        y = self.field.coerce(b)
        acc: Raw = 0
        for (i, j), c in self._terms.items():
            acc += c * x**i * y**j
        return self.field.reduce(acc)

    # ------------------------------------------------------------------
    # Equality
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.field == other.field and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from planelin.exactalg.grammar import format_bipoly

        return f"BiPoly({format_bipoly(self)})"


def bipoly_subst(h: BiPoly, u: BiPoly, v: BiPoly) -> BiPoly:
    """Return ``h(u, v)``."""
    return h.subst(u, v)


def compose_univariate(f: UniPoly, inner: BiPoly) -> BiPoly:
    """Return ``f(inner)`` for a polynomial ``f`` in ``t``."""
    f.field.check(inner.field)
    acc = BiPoly.zero(f.field)
    for c in reversed(f.coeffs):
        acc = acc * inner + c
    return acc
