"""The group generated by ``S = id/2``, ``S' = [[1, 1], [1, 0]]`` and ``T = (x, y + x^2)``.

Abstractly this is ``G1 *_A G2`` with ``A = <s>``, ``G1 = <s, s'>`` free abelian
of rank two and ``G2 = <s, t | s t s^-1 = t^2>``. Elements of the abstract
group are tuples of syllables:

* ``A``: ``s^a``;
* ``G1``: ``s^a s'^b`` with ``b != 0``;
* ``G2``: ``t^q s^a`` with ``q`` a nonzero dyadic rational.

Distinct normal forms mapping to distinct automorphisms is the faithfulness
of the representation ``s -> S``, ``s' -> S'``, ``t -> T``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import cache

from planelin.amalgam.engine import AmalgamSpec, ReducedWord, Side, reduce
from planelin.errors import ParseError, SpecViolation
from planelin.exactalg import QQ, Mat2, UniPoly
from planelin.planeaut import ElementaryAut, PolyAut, compose, compose_all
from planelin.witness.models import (
    Collision,
    DistinctnessReport,
    RelationCheck,
    RelationReport,
)

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


class Letter(StrEnum):
    SIGMA = "s"
    SIGMA_INV = "s^-1"
    SIGMA_PRIME = "s'"
    SIGMA_PRIME_INV = "s'^-1"
    TAU = "t"
    TAU_INV = "t^-1"


def gamma_generators() -> tuple[PolyAut, PolyAut, PolyAut]:
    """``(S, S', T)`` over the rationals."""
    s = PolyAut.from_linear(Mat2.scalar(QQ, HALF))
    s_prime = PolyAut.from_linear(Mat2(1, 1, 1, 0, QQ))
    return s, s_prime, _tau_power(Fraction(1))


def _tau_power(q: Fraction) -> PolyAut:
    """``T^q = (x, y + q x^2)``."""
    return ElementaryAut.shear(UniPoly.monomial(QQ, q, 2)).to_polyaut()


def _linear_power(a: int, b: int) -> PolyAut:
    return PolyAut.from_linear(Mat2.scalar(QQ, HALF**a) * Mat2(1, 1, 1, 0, QQ) ** b)


# ----------------------------------------------------------------------
# Syllables of the abstract group
# ----------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Syllable:
    """One factor-group element; ``side`` 0 marks an element of ``A``."""

    side: int
    a: int = 0
    b: int = 0
    q: Fraction = Fraction(0)

    @property
    def is_identity(self) -> bool:
        return self.side == 0 and self.a == 0

    def inverse(self) -> Syllable:
        if self.side == 2:
            return _syllable(2, -self.a, q=-self.q * HALF**self.a)
        return _syllable(self.side, -self.a, b=-self.b)

    def automorphism(self) -> PolyAut:
        if self.side == 2:
            return compose(_tau_power(self.q), _linear_power(self.a, 0))
        return _linear_power(self.a, self.b)

    def __str__(self) -> str:
        match self.side:
            case 0:
                return f"s^{self.a}"
            case 1:
                return f"s^{self.a} s'^{self.b}"
        return f"t^{self.q} s^{self.a}"


GammaElement = tuple[Syllable, ...]

LETTERS: dict[Letter, Syllable] = {
    Letter.SIGMA: Syllable(0, 1),
    Letter.SIGMA_INV: Syllable(0, -1),
    Letter.SIGMA_PRIME: Syllable(1, 0, 1),
    Letter.SIGMA_PRIME_INV: Syllable(1, 0, -1),
    Letter.TAU: Syllable(2, 0, q=Fraction(1)),
    Letter.TAU_INV: Syllable(2, 0, q=Fraction(-1)),
}


def _syllable(side: int, a: int, b: int = 0, q: Fraction = Fraction(0)) -> Syllable:
    """Build a syllable, demoting it to ``A`` when its non-``A`` part vanishes."""
    if (side == 1 and b == 0) or (side == 2 and q == 0):
        side = 0
    return Syllable(side, a, b if side == 1 else 0, q if side == 2 else Fraction(0))


def _compatible(x: Syllable, y: Syllable) -> bool:
    return x.side == 0 or y.side == 0 or x.side == y.side


def _merge(x: Syllable, y: Syllable) -> Syllable:
    side = x.side or y.side
    if side == 2:
        # t^q1 s^a1 t^q2 s^a2 = t^(q1 + 2^a1 q2) s^(a1 + a2)
        return _syllable(2, x.a + y.a, q=x.q + Fraction(2) ** x.a * y.q)
    return _syllable(side, x.a + y.a, b=x.b + y.b)


def normalize(syllables: Iterable[Syllable]) -> GammaElement:
    """Merge neighbouring syllables of the same factor group."""
    out: list[Syllable] = []
    for s in syllables:
        while out and _compatible(out[-1], s):
            s = _merge(out.pop(), s)
        if not s.is_identity:
            out.append(s)
    return tuple(out)


def _invert(g: GammaElement) -> GammaElement:
    return normalize(s.inverse() for s in reversed(g))


def _in_a(g: GammaElement) -> bool:
    return not g or (len(g) == 1 and g[0].side == 0)


def _side_of(g: GammaElement) -> Side:
    if len(g) != 1 or g[0].side == 0:
        raise SpecViolation(f"{_format(g)} is not a factor-group element outside A")
    return Side(g[0].side)


def _coset_rep(g: GammaElement) -> tuple[GammaElement, GammaElement]:
    (x,) = g
    if x.side == 1:
        rep = Syllable(1, 0, x.b)
    elif x.side == 2:
        rep = Syllable(2, 0, q=x.q)
    else:
        raise SpecViolation("Elements of A have no coset representative")
    return (rep,), normalize([Syllable(0, x.a)])


def _format(g: GammaElement) -> str:
    return " . ".join(map(str, g)) or "1"


@cache
def gamma_amalgam() -> AmalgamSpec[GammaElement]:
    """The abstract group as ``<s, s'> *_<s> <s, t>``."""
    return AmalgamSpec(
        identity=(),
        multiply=lambda g, h: normalize((*g, *h)),
        invert=_invert,
        equal=lambda g, h: g == h,
        key=lambda g: g,
        in_a=_in_a,
        coset_rep=_coset_rep,
        side_of=_side_of,
        samples={
            Side.ONE: [(LETTERS[Letter.SIGMA_PRIME],), (Syllable(1, 0, 2),)],
            Side.TWO: [(LETTERS[Letter.TAU],), (Syllable(2, 0, q=Fraction(3)),)],
        },
        name="Gamma",
    )


def gamma_h_witness(a: GammaElement) -> list[GammaElement]:
    """``t`` moves every nontrivial ``s^a`` out of ``A``: ``t s^a t^-1 = t^(1 - 2^a) s^a``."""
    return [(LETTERS[Letter.TAU],)]


def gamma_automorphism(word: ReducedWord[GammaElement]) -> PolyAut:
    """Evaluate a reduced word of the abstract group under ``s, s', t -> S, S', T``."""
    syllables = [s for element in word.elements() for s in element]
    return compose_all([s.automorphism() for s in syllables], QQ)


# ----------------------------------------------------------------------
# Words and relations
# ----------------------------------------------------------------------


def parse_letters(text: str) -> list[Letter]:
    """Split whitespace-separated letters such as ``s t s^-1 t^-1``."""
    letters: list[Letter] = []
    offset = 0
    for token in text.split():
        offset = text.index(token, offset)
        try:
            letters.append(Letter(token))
        except ValueError:
            raise ParseError(f"Unknown letter {token!r}", len(text[:offset].encode())) from None
        offset += len(token)
    return letters


def gamma_word(letters: Sequence[Letter | str]) -> PolyAut:
    """The automorphism of a word in ``s, s', t`` and their inverses."""
    s, s_prime, t = gamma_generators()
    images = {
        Letter.SIGMA: s,
        Letter.SIGMA_PRIME: s_prime,
        Letter.TAU: t,
        Letter.SIGMA_INV: PolyAut.from_linear(Mat2.scalar(QQ, 2)),
        Letter.SIGMA_PRIME_INV: PolyAut.from_linear(Mat2(0, 1, 1, -1, QQ)),
        Letter.TAU_INV: _tau_power(Fraction(-1)),
    }
    return compose_all([images[Letter(letter)] for letter in letters], QQ)


def _check(name: str, lhs: PolyAut, rhs: PolyAut) -> RelationCheck:
    return RelationCheck(name=name, passed=lhs == rhs, lhs=str(lhs), rhs=str(rhs))


def verify_gamma_relations(t_override: PolyAut | None = None) -> RelationReport:
    """Check ``S S' = S' S`` and ``S T S^-1 = T^2``.

    ``t_override`` replaces ``T``; ``(x, y + x^3)`` is the negative control for
    which the second relation fails.
    """
    s, s_prime, t = gamma_generators()
    if t_override is not None:
        t = t_override
    s_inv = PolyAut.from_linear(Mat2.scalar(QQ, 2))
    report = RelationReport(
        checks=[
            _check("s s' = s' s", compose(s, s_prime), compose(s_prime, s)),
            _check("s t s^-1 = t^2", compose_all([s, t, s_inv]), compose(t, t)),
        ]
    )
    logger.info("gamma relations: %s", "pass" if report.passed else "FAIL")
    return report


def verify_s_prime_powers(bound: int = 12) -> RelationReport:
    """``S'^n`` for ``0 < |n| <= bound`` is neither lower nor upper triangular."""
    s_prime = Mat2(1, 1, 1, 0, QQ)
    checks = []
    for n in (*range(-bound, 0), *range(1, bound + 1)):
        power = s_prime**n
        triangular = power.is_lower_triangular or power.is_upper_triangular
        checks.append(
            RelationCheck(
                name=f"s'^{n} not triangular",
                passed=not triangular,
                lhs=str(power),
                rhs="non-triangular",
            )
        )
    return RelationReport(checks=checks)


def distinctness_suite(length_bound: int) -> DistinctnessReport:
    """Search the ball of words of letter length ``<= length_bound``.

    Words are deduplicated by their normal form in the abstract group; every
    new normal form is evaluated once and a collision is recorded when two
    normal forms give the same automorphism.
    """
    spec = gamma_amalgam()
    start: ReducedWord[GammaElement] = ReducedWord((), (), ())
    seen: dict[object, list[str]] = {start.key(spec): []}
    images: dict[PolyAut, tuple[object, list[str]]] = {
        PolyAut.identity(QQ): (start.key(spec), [])
    }
    collisions: list[Collision] = []
    frontier: list[tuple[ReducedWord[GammaElement], list[str]]] = [(start, [])]
    explored = 0
    for _ in range(length_bound):
        next_frontier: list[tuple[ReducedWord[GammaElement], list[str]]] = []
        for word, letters in frontier:
            for letter, syllable in LETTERS.items():
                explored += 1
                extended = reduce([*word.elements(), (syllable,)], spec)
                key = extended.key(spec)
                if key in seen:
                    continue
                spelled = [*letters, str(letter)]
                seen[key] = spelled
                next_frontier.append((extended, spelled))
                image = gamma_automorphism(extended)
                if image in images:
                    collisions.append(
                        Collision(first=images[image][1], second=spelled, automorphism=str(image))
                    )
                else:
                    images[image] = (key, spelled)
        frontier = next_frontier
    logger.info(
        "distinctness: %d normal forms up to length %d, %d collisions",
        len(seen),
        length_bound,
        len(collisions),
    )
    return DistinctnessReport(
        length_bound=length_bound,
        explored=explored,
        normal_forms=len(seen),
        collisions=collisions,
    )
