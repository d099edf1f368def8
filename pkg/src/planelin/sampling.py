"""Seeded random generators for the property suites.

Every generator takes an explicit :class:`random.Random` so a run is
reproduced from its seed alone.
"""

from __future__ import annotations

import random
from fractions import Fraction

from planelin.exactalg import FieldSpec, Mat2, ProjPoint, Raw, UniPoly
from planelin.freefactor import TauFactor, TauWord
from planelin.matpoly import EFactor, EWord
from planelin.planeaut import AffineAut, ElementaryAut, PolyAut

# Numerators and denominators of random rationals
_SPAN = 5
_DENOMINATORS = (1, 1, 1, 2, 3)


def random_scalar(field: FieldSpec, rng: random.Random, nonzero: bool = False) -> Raw:
    while True:
        if field.is_rational:
            value: Raw = Fraction(rng.randint(-_SPAN, _SPAN), rng.choice(_DENOMINATORS))
        else:
            value = rng.randrange(field.p)
        if value != 0 or not nonzero:
            return value


def random_unipoly(
    field: FieldSpec, rng: random.Random, degree: int, low: int = 0
) -> UniPoly:
    """A polynomial of exact ``degree`` with no terms below ``t^low``."""
    coeffs: list[Raw] = [0] * low
    coeffs += [random_scalar(field, rng) for _ in range(low, degree)]
    coeffs.append(random_scalar(field, rng, nonzero=True))
    return UniPoly(field, coeffs)


def random_point(field: FieldSpec, rng: random.Random) -> ProjPoint:
    if not field.is_rational:
        return rng.choice(list(ProjPoint.enumerate(field)))
    if rng.random() < 0.2:
        return ProjPoint.of(field, 0, 1)
    return ProjPoint.of(field, 1, random_scalar(field, rng))


def random_other_point(
    field: FieldSpec, rng: random.Random, avoid: ProjPoint | None
) -> ProjPoint:
    while True:
        delta = random_point(field, rng)
        if delta != avoid:
            return delta


def random_linear(field: FieldSpec, rng: random.Random) -> Mat2:
    """A random invertible matrix."""
    while True:
        m = Mat2(*(random_scalar(field, rng) for _ in range(4)), field)
        if m.determinant != 0:
            return m


def random_affine(field: FieldSpec, rng: random.Random) -> AffineAut:
    translation = (random_scalar(field, rng), random_scalar(field, rng))
    return AffineAut(random_linear(field, rng), translation)


def random_elementary(field: FieldSpec, rng: random.Random, max_degree: int = 3) -> ElementaryAut:
    return ElementaryAut(
        random_scalar(field, rng, nonzero=True),
        random_scalar(field, rng, nonzero=True),
        random_scalar(field, rng),
        random_unipoly(field, rng, rng.randint(2, max_degree)),
    )


def random_aut_word(
    field: FieldSpec, rng: random.Random, length: int, max_degree: int = 3
) -> list[PolyAut]:
    """Alternating affine and elementary factors, starting on a random side."""
    affine_first = rng.random() < 0.5
    return [
        random_affine(field, rng).to_polyaut()
        if (i % 2 == 0) == affine_first
        else random_elementary(field, rng, max_degree).to_polyaut()
        for i in range(length)
    ]


def random_tau_word(
    field: FieldSpec, rng: random.Random, length: int, max_degree: int = 3
) -> TauWord:
    """A reduced word of ``length`` tau factors on alternating distinct lines."""
    factors: list[TauFactor] = []
    delta: ProjPoint | None = None
    for _ in range(length):
        delta = random_other_point(field, rng, delta)
        f = random_unipoly(field, rng, rng.randint(2, max_degree), low=2)
        factors.append(TauFactor(delta, f))
    return TauWord(field, tuple(factors))


def random_aut1(
    field: FieldSpec, rng: random.Random, length: int, max_degree: int = 3
) -> PolyAut:
    """An automorphism fixing the origin with identity differential."""
    return random_tau_word(field, rng, length, max_degree).recompose()


def random_e_word(
    field: FieldSpec, rng: random.Random, length: int, max_degree: int = 2
) -> EWord:
    factors: list[EFactor] = []
    delta: ProjPoint | None = None
    for _ in range(length):
        delta = random_other_point(field, rng, delta)
        factors.append(EFactor(delta, random_unipoly(field, rng, rng.randint(0, max_degree))))
    return EWord(field, tuple(factors))
