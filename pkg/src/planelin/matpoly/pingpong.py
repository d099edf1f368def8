"""Highest components of polynomial vectors and the ping-pong check.

For ``v = v_0 + v_1 t + ... + v_n t^n`` with ``v_n != 0`` the highest
component is ``hc(v) = v_n``; ``Omega_delta`` is the set of vectors whose
highest component lies on ``delta``. Each nontrivial ``E_delta`` factor maps
``Omega_delta'`` into ``Omega_delta`` whenever ``delta' != delta``.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from planelin.errors import BadShape, ZeroVector
from planelin.exactalg import FieldSpec, ProjPoint, UniPoly, Vector
from planelin.matpoly.generation import EFactor
from planelin.matpoly.models import PingPongReport, PingPongViolation

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class PolyVector:
    """A nonzero vector of ``K[t]^2``."""

    x: UniPoly
    y: UniPoly

    def __post_init__(self) -> None:
        self.x.field.check(self.y.field)
        if self.x.is_zero and self.y.is_zero:
            raise ZeroVector("The zero vector has no highest component")

    @property
    def field(self) -> FieldSpec:
        return self.x.field

    @property
    def degree(self) -> int:
        return max(self.x.degree, self.y.degree)

    @property
    def hc(self) -> Vector:
        n = self.degree
        return (self.x.coeff(n), self.y.coeff(n))

    def line(self) -> ProjPoint:
        """The line of the highest component."""
        return ProjPoint.through(self.field, self.hc)

    def __str__(self) -> str:
        from planelin.exactalg.grammar import format_unipoly

        return f"({format_unipoly(self.x)} ; {format_unipoly(self.y)})"


def vector_degree(v: PolyVector) -> int:
    return v.degree


def vector_hc(v: PolyVector) -> Vector:
    return v.hc


def omega_member(v: PolyVector, delta: ProjPoint) -> bool:
    """Whether ``hc(v)`` lies on ``delta``."""
    return delta.contains(v.hc)


def apply_factor(factor: EFactor, v: PolyVector) -> PolyVector:
    x, y = factor.matrix().apply((v.x, v.y))
    return PolyVector(x, y)


def verify_pingpong(
    samples: Mapping[ProjPoint, Sequence[EFactor]],
    vectors: Mapping[ProjPoint, Sequence[PolyVector]],
) -> PingPongReport:
    """Check every sampled factor against every sampled vector on another line."""
    checked = skipped = 0
    violations: list[PingPongViolation] = []
    for delta, factors in samples.items():
        for factor in factors:
            if factor.delta != delta:
                raise BadShape(f"Factor {factor} filed under line {delta}")
            for source, vecs in vectors.items():
                for v in vecs:
                    if not omega_member(v, source):
                        raise BadShape(f"Vector {v} is not in Omega{source}")
                    if source == delta:
                        skipped += 1
                        continue
                    checked += 1
                    image = apply_factor(factor, v)
                    if not omega_member(image, delta):
                        violations.append(
                            PingPongViolation(
                                factor=str(factor),
                                vector=str(v),
                                vector_line=str(source),
                                image_hc=str(image.line()),
                            )
                        )
    if violations:
        logger.warning("ping-pong: %d violations in %d pairs", len(violations), checked)
    else:
        logger.info("ping-pong: %d pairs passed, %d skipped", checked, skipped)
    return PingPongReport(checked=checked, skipped=skipped, violations=violations)


def _random_poly(field: FieldSpec, rng: random.Random, degree: int) -> UniPoly:
    values = [rng.randrange(field.p) for _ in range(degree)]
    return UniPoly(field, [*values, rng.randrange(1, field.p)])


def pingpong_grid(
    field: FieldSpec,
    factors_per_line: int,
    vectors_per_line: int,
    rng: random.Random,
    max_degree: int = 2,
) -> tuple[dict[ProjPoint, list[EFactor]], dict[ProjPoint, list[PolyVector]]]:
    """Random factors and vectors on every line of ``P^1(F_p)``."""
    if field.is_rational:
        raise ValueError("The ping-pong grid enumerates a finite projective line")
    samples: dict[ProjPoint, list[EFactor]] = {}
    vectors: dict[ProjPoint, list[PolyVector]] = {}
    for delta in ProjPoint.enumerate(field):
        samples[delta] = [
            EFactor(delta, _random_poly(field, rng, rng.randint(0, max_degree)))
            for _ in range(factors_per_line)
        ]
        wa, wb = delta.vector
        vecs = []
        for _ in range(vectors_per_line):
            n = rng.randint(0, max_degree)
            top = UniPoly.monomial(field, rng.randrange(1, field.p), n)
            low_x = UniPoly(field, [rng.randrange(field.p) for _ in range(n)])
            low_y = UniPoly(field, [rng.randrange(field.p) for _ in range(n)])
            vecs.append(PolyVector(low_x + top.scale(wa), low_y + top.scale(wb)))
        vectors[delta] = vecs
    return samples, vectors
