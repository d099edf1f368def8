"""Text grammar for scalars, polynomials, matrices, points and automorphisms.

The same grammar is used for input (CLI payloads, test fixtures) and output,
so every formatted value parses back to itself::

    scalar      3   -7/2
    polynomial  t^3 - 2*t   x^2*y + 1
    matrix      [[1,0],[t,1]]
    point       (0:1)
    automorphism (x ; y + x^2)

Whitespace is insignificant. Errors carry the byte offset of the offending
token.
"""

from __future__ import annotations

import re
from collections.abc import Iterable
from dataclasses import dataclass

from planelin.errors import ParseError
from planelin.exactalg.bipoly import BiPoly
from planelin.exactalg.field import FieldSpec, Raw, Scalar
from planelin.exactalg.matrix import Mat2, MatPoly2
from planelin.exactalg.projective import ProjPoint
from planelin.exactalg.unipoly import UniPoly

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<sym>\S))", re.ASCII
)
_SYMBOLS = frozenset("+-*/^()[],;:")
_VARIABLES = {"x": 0, "y": 1, "t": 2}

# Exponent triple (x, y, t) -> raw coefficient
_Terms = dict[tuple[int, int, int], Raw]


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # "num", "name", "sym" or "end"
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while True:
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            break
        kind = match.lastgroup or "sym"
        start = match.start(kind)
        value = match.group(kind)
        offset = len(text[:start].encode("utf-8"))
        if kind == "sym" and value not in _SYMBOLS:
            raise ParseError(f"Unexpected character {value!r}", offset)
        tokens.append(_Token(kind, value, offset))
        pos = match.end()
    tokens.append(_Token("end", "", len(text.encode("utf-8"))))
    return tokens


class _Parser:
    """Recursive-descent parser over a token list."""

    def __init__(self, text: str, field: FieldSpec) -> None:
        self.field = field
        self.tokens = _tokenize(text)
        self.index = 0

    # ------------------------------------------------------------------
    # Token helpers
    # ------------------------------------------------------------------

    def peek(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.tokens[self.index]
        if token.kind != "end":
            self.index += 1
        return token

    def accept(self, symbol: str) -> bool:
        token = self.peek()
        if token.kind == "sym" and token.text == symbol:
            self.index += 1
            return True
        return False

    def expect(self, symbol: str) -> None:
        token = self.peek()
        if not self.accept(symbol):
            found = token.text or "end of input"
            raise ParseError(f"Expected {symbol!r}, found {found!r}", token.offset)

    def finish(self) -> None:
        token = self.peek()
        if token.kind != "end":
            raise ParseError(f"Unexpected trailing input {token.text!r}", token.offset)

    # ------------------------------------------------------------------
    # Expressions
    # ------------------------------------------------------------------

    def expression(self) -> _Terms:
        acc = self.term()
        while True:
            if self.accept("+"):
                acc = _add(acc, self.term(), 1)
            elif self.accept("-"):
                acc = _add(acc, self.term(), -1)
            else:
                return acc

    def term(self) -> _Terms:
        acc = self.unary()
        while True:
            if self.accept("*"):
                acc = _mul(acc, self.unary())
            elif self.peek().kind == "sym" and self.peek().text == "/":
                token = self.advance()
                divisor = self.clean(self.unary())
                if set(divisor) - {(0, 0, 0)} or not divisor:
                    raise ParseError("Division by a non-constant or zero", token.offset)
                try:
                    inv = self.field.inv(divisor[(0, 0, 0)])
                except ZeroDivisionError as exc:
                    raise ParseError("Division by zero", token.offset) from exc
                acc = {k: v * inv for k, v in acc.items()}
            else:
                return acc

    def unary(self) -> _Terms:
        if self.accept("-"):
            return {k: -v for k, v in self.unary().items()}
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> _Terms:
        base = self.atom()
        if self.accept("^"):
            token = self.advance()
            if token.kind != "num":
                raise ParseError("Exponent must be a non-negative integer", token.offset)
            result: _Terms = {(0, 0, 0): 1}
            for _ in range(int(token.text)):
                result = _mul(result, base)
            return result
        return base

    def atom(self) -> _Terms:
        token = self.advance()
        if token.kind == "num":
            return {(0, 0, 0): self.field.coerce(int(token.text))}
        if token.kind == "name":
            if token.text not in _VARIABLES:
                raise ParseError(f"Unknown variable {token.text!r}", token.offset)
            exponents = [0, 0, 0]
            exponents[_VARIABLES[token.text]] = 1
            return {(exponents[0], exponents[1], exponents[2]): 1}
        if token.kind == "sym" and token.text == "(":
            inner = self.expression()
            self.expect(")")
            return inner
        found = token.text or "end of input"
        raise ParseError(f"Unexpected {found!r}", token.offset)

    # ------------------------------------------------------------------
    # Conversions
    # ------------------------------------------------------------------

    def clean(self, terms: _Terms) -> _Terms:
        """Reduce coefficients and drop the ones that vanish."""
        reduced = {k: self.field.reduce(v) for k, v in terms.items()}
        return {k: v for k, v in reduced.items() if v != 0}

    def to_scalar(self, terms: _Terms, offset: int) -> Raw:
        terms = self.clean(terms)
        if set(terms) - {(0, 0, 0)}:
            raise ParseError("Expected a constant", offset)
        return self.field.reduce(terms.get((0, 0, 0), 0))

    def to_unipoly(self, terms: _Terms, offset: int) -> UniPoly:
        terms = self.clean(terms)
        if any(i or j for i, j, _ in terms):
            raise ParseError("Expected a polynomial in t", offset)
        degree = max((k for _, _, k in terms), default=-1)
        values: list[Raw] = [0] * (degree + 1)
        for (_, _, k), c in terms.items():
            values[k] = c
        return UniPoly._make(self.field, values)

    def to_bipoly(self, terms: _Terms, offset: int) -> BiPoly:
        terms = self.clean(terms)
        if any(k for _, _, k in terms):
            raise ParseError("Expected a polynomial in x and y", offset)
        return BiPoly._make(self.field, {(i, j): c for (i, j, _), c in terms.items()})

    # ------------------------------------------------------------------
    # Compound values
    # ------------------------------------------------------------------

    def matrix_rows(self) -> list[list[tuple[_Terms, int]]]:
        self.expect("[")
        rows = []
        for r in range(2):
            if r:
                self.expect(",")
            self.expect("[")
            row = []
            for c in range(2):
                if c:
                    self.expect(",")
                offset = self.peek().offset
                row.append((self.expression(), offset))
            self.expect("]")
            rows.append(row)
        self.expect("]")
        return rows


def _add(a: _Terms, b: _Terms, sign: int) -> _Terms:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
    return out


def _mul(a: _Terms, b: _Terms) -> _Terms:
    out: _Terms = {}
    for (i1, j1, k1), c1 in a.items():
        for (i2, j2, k2), c2 in b.items():
            key = (i1 + i2, j1 + j2, k1 + k2)
            out[key] = out.get(key, 0) + c1 * c2
    return out


# ----------------------------------------------------------------------
# Public parsers
# ----------------------------------------------------------------------


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    parser = _Parser(text, field)
    offset = parser.peek().offset
    value = parser.to_scalar(parser.expression(), offset)
    parser.finish()
    return Scalar(value, field)


def parse_unipoly(text: str, field: FieldSpec) -> UniPoly:
    parser = _Parser(text, field)
    offset = parser.peek().offset
    poly = parser.to_unipoly(parser.expression(), offset)
    parser.finish()
    return poly


def parse_bipoly(text: str, field: FieldSpec) -> BiPoly:
    parser = _Parser(text, field)
    offset = parser.peek().offset
    poly = parser.to_bipoly(parser.expression(), offset)
    parser.finish()
    return poly


def parse_point(text: str, field: FieldSpec) -> ProjPoint:
    parser = _Parser(text, field)
    start = parser.peek().offset
    parser.expect("(")
    offset = parser.peek().offset
    a = parser.to_scalar(parser.expression(), offset)
    parser.expect(":")
    offset = parser.peek().offset
    b = parser.to_scalar(parser.expression(), offset)
    parser.expect(")")
    parser.finish()
    if a == 0 and b == 0:
        raise ParseError("(0:0) is not a projective point", start)
    return ProjPoint(a, b, field)


def parse_mat2(text: str, field: FieldSpec) -> Mat2:
    parser = _Parser(text, field)
    rows = parser.matrix_rows()
    parser.finish()
    (a, b), (c, d) = ([parser.to_scalar(t, o) for t, o in row] for row in rows)
    return Mat2(a, b, c, d, field)


def parse_matpoly(text: str, field: FieldSpec) -> MatPoly2:
    parser = _Parser(text, field)
    rows = parser.matrix_rows()
    parser.finish()
    (a, b), (c, d) = ([parser.to_unipoly(t, o) for t, o in row] for row in rows)
    return MatPoly2(a, b, c, d)


def parse_automorphism(text: str, field: FieldSpec) -> tuple[BiPoly, BiPoly]:
    """Parse ``(f ; g)`` into the component pair."""
    parser = _Parser(text, field)
    parser.expect("(")
    offset = parser.peek().offset
    f = parser.to_bipoly(parser.expression(), offset)
    parser.expect(";")
    offset = parser.peek().offset
    g = parser.to_bipoly(parser.expression(), offset)
    parser.expect(")")
    parser.finish()
    return f, g


# ----------------------------------------------------------------------
# Formatting
# ----------------------------------------------------------------------


def _monomial(powers: Iterable[tuple[str, int]]) -> str:
    parts = [name if n == 1 else f"{name}^{n}" for name, n in powers if n]
    return "*".join(parts)


def _join_terms(field: FieldSpec, terms: Iterable[tuple[Raw, str]]) -> str:
    out: list[str] = []
    for coefficient, monomial in terms:
        negative = field.is_rational and coefficient < 0
        magnitude = -coefficient if negative else coefficient
        if monomial and magnitude == 1:
            body = monomial
        elif monomial:
            body = f"{field.format(magnitude)}*{monomial}"
        else:
            body = field.format(magnitude)
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(out) if out else "0"


def format_scalar(value: Raw, field: FieldSpec) -> str:
    return field.format(value)


def format_unipoly(poly: UniPoly, var: str = "t") -> str:
    terms = (
        (c, _monomial([(var, n)]))
        for n, c in reversed(list(enumerate(poly.coeffs)))
        if c != 0
    )
    return _join_terms(poly.field, terms)


def format_bipoly(poly: BiPoly) -> str:
    terms = ((c, _monomial([("x", i), ("y", j)])) for (i, j), c in poly.items())
    return _join_terms(poly.field, terms)


def format_mat2(m: Mat2) -> str:
    fmt = m.field.format
    return f"[[{fmt(m.a)},{fmt(m.b)}],[{fmt(m.c)},{fmt(m.d)}]]"


def format_matpoly(m: MatPoly2) -> str:
    a, b, c, d = (format_unipoly(e) for e in m.entries)
    return f"[[{a},{b}],[{c},{d}]]"


def format_automorphism(f: BiPoly, g: BiPoly) -> str:
    return f"({format_bipoly(f)} ; {format_bipoly(g)})"
