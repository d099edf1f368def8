"""Congruence subgroups ``S' = S ∩ GL(2, m)`` for ``S`` over ``Z[1/d]``.

The modulus ``m`` is a prime coprime to ``d`` such that no trace/determinant
pair ``(s, p)`` of two ``N``-th roots of unity, other than ``(2, 1)``, is
congruent to ``(2, 1)`` modulo ``m``. Generators of ``S'`` come from coset
enumeration of the finite image of ``S`` in ``GL(2, Z/m)`` and Schreier's
lemma.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import sympy

from planelin.errors import ImageCapExceeded, UnsupportedField
from planelin.exactalg import FieldSpec, Mat2, Raw
from planelin.linmap.classify import quasi_order_bound
from planelin.linmap.subgroup import SubgroupSpec

logger = logging.getLogger(__name__)

ScalarPair = tuple[Raw, Raw]
ImageKey = tuple[int, int, int, int]


# ----------------------------------------------------------------------
# Trace/determinant pairs of roots of unity
# ----------------------------------------------------------------------


def _rational_pairs(n: int) -> set[ScalarPair]:
    x = sympy.Symbol("x")
    modulus = sympy.Poly(sympy.cyclotomic_poly(n, x), x)
    powers = [sympy.Poly(x**k, x).rem(modulus) for k in range(n)]

    def constant(poly: sympy.Poly) -> Fraction | None:
        if poly.degree() > 0:
            return None
        value = sympy.Rational(poly.as_expr())
        return Fraction(int(value.p), int(value.q))

    pairs: set[ScalarPair] = set()
    for a, b in product(range(n), repeat=2):
        s = constant((powers[a] + powers[b]).rem(modulus))
        p = constant(powers[(a + b) % n])
        if s is not None and p is not None:
            pairs.add((s, p))
    return pairs


def smallest_irreducible_quadratic(p: int) -> tuple[int, int]:
    """``(a, b)`` for the first monic irreducible ``X^2 + a X + b`` over ``F_p``."""
    for a, b in product(range(p), repeat=2):
        if all((x * x + a * x + b) % p for x in range(p)):
            return a, b
    raise ValueError(f"No irreducible quadratic over F_{p}")


def _prime_pairs(n: int, field: FieldSpec) -> set[ScalarPair]:
    p = field.p
    a, b = smallest_irreducible_quadratic(p)

    # F_{p^2} = F_p[X]/(X^2 + a X + b); elements are pairs (c0, c1)
    def mul(u: tuple[int, int], v: tuple[int, int]) -> tuple[int, int]:
        c0 = u[0] * v[0]
        c1 = u[0] * v[1] + u[1] * v[0]
        c2 = u[1] * v[1]
        return ((c0 - b * c2) % p, (c1 - a * c2) % p)

    def power(u: tuple[int, int], k: int) -> tuple[int, int]:
        result = (1, 0)
        while k:
            if k & 1:
                result = mul(result, u)
            u = mul(u, u)
            k >>= 1
        return result

    roots = [
        (c0, c1)
        for c0, c1 in product(range(p), repeat=2)
        if (c0, c1) != (0, 0) and power((c0, c1), n) == (1, 0)
    ]
    pairs: set[ScalarPair] = set()
    for u, v in product(roots, repeat=2):
        s = ((u[0] + v[0]) % p, (u[1] + v[1]) % p)
        prod = mul(u, v)
        if s[1] == 0 and prod[1] == 0:
            pairs.add((s[0], prod[0]))
    return pairs


def pair_set_C(n: int, field: FieldSpec) -> set[ScalarPair]:  # noqa: N802
    """``{(z1 + z2, z1 z2)}`` over ``N``-th roots of unity, kept when both lie in ``K``."""
    pairs = _rational_pairs(n) if field.is_rational else _prime_pairs(n, field)
    logger.debug("pair set for N=%d over %s has %d elements", n, field, len(pairs))
    return pairs


# ----------------------------------------------------------------------
# Modulus
# ----------------------------------------------------------------------


def _require_rationals(subgroup: SubgroupSpec) -> None:
    if not subgroup.field.is_rational:
        raise UnsupportedField("Congruence subgroups are built over the rationals")


def denominator_bound(subgroup: SubgroupSpec) -> int:
    """The least ``d`` with every generator and inverse in ``GL(2, Z[1/d])``."""
    _require_rationals(subgroup)
    d = 1
    for _, g in subgroup.letters():
        for entry in (g.a, g.b, g.c, g.d):
            d = math.lcm(d, Fraction(entry).denominator)
    return d


def _residue(value: Raw, m: int) -> int:
    q = Fraction(value)
    return q.numerator * pow(q.denominator, -1, m) % m


def smallest_admissible_prime(pairs: set[ScalarPair], d: int) -> int:
    """The least prime ``m`` coprime to ``d`` separating ``C \\ {(2, 1)}`` from ``(2, 1)``."""
    others = [(s, p) for s, p in pairs if (s, p) != (2, 1)]
    m = 2
    while True:
        if d % m and all(
            Fraction(s).denominator % m == 0
            or Fraction(p).denominator % m == 0
            or _residue(s - 2, m) != 0
            or _residue(p - 1, m) != 0
            for s, p in others
        ):
            return m
        m = int(sympy.nextprime(m))


def congruence_modulus(subgroup: SubgroupSpec) -> int:
    """The modulus ``m`` for ``S``, from ``N = quasi_order_bound(S)`` and ``d``."""
    _require_rationals(subgroup)
    pairs = pair_set_C(quasi_order_bound(subgroup), subgroup.field)
    return smallest_admissible_prime(pairs, denominator_bound(subgroup))


# ----------------------------------------------------------------------
# Coset enumeration
# ----------------------------------------------------------------------


def _image_key(m: Mat2, modulus: int) -> ImageKey:
    return (
        _residue(m.a, modulus),
        _residue(m.b, modulus),
        _residue(m.c, modulus),
        _residue(m.d, modulus),
    )


@dataclass(frozen=True, slots=True)
class CongruenceSubgroup:
    """``S' = S ∩ GL(2, m)`` with coset representatives of ``S / S'``."""

    parent: SubgroupSpec
    modulus: int
    generators: tuple[Mat2, ...]
    coset_reps: tuple[Mat2, ...]

    @property
    def index(self) -> int:
        return len(self.coset_reps)

    @property
    def subgroup(self) -> SubgroupSpec:
        return SubgroupSpec(self.parent.field, self.generators)

    def contains(self, m: Mat2) -> bool:
        """Membership for elements of ``S``: ``m`` is the identity modulo ``m``."""
        return _image_key(m, self.modulus) == (1, 0, 0, 1)

    def coset_index(self, m: Mat2) -> int | None:
        """Index ``i`` with ``m`` in ``r_i S'``, for elements of ``S``."""
        key = _image_key(m, self.modulus)
        for i, rep in enumerate(self.coset_reps):
            if _image_key(rep, self.modulus) == key:
                return i
        return None


def congruence_subgroup_gens(
    subgroup: SubgroupSpec, modulus: int, cap: int
) -> CongruenceSubgroup:
    """Schreier generators ``t s rep(t s)^-1`` of the kernel of reduction mod ``m``.

    Raises:
        ImageCapExceeded: the image in ``GL(2, Z/m)`` has more than ``cap`` elements.
        UnsupportedField: ``S`` is not over the rationals.
    """
    if denominator_bound(subgroup) % modulus == 0:
        raise ValueError(f"Modulus {modulus} divides a denominator of the generators")
    identity = Mat2.identity(subgroup.field)
    reps: dict[ImageKey, Mat2] = {_image_key(identity, modulus): identity}
    queue = deque([identity])
    while queue:
        t = queue.popleft()
        for s in subgroup.generators:
            ts = t * s
            key = _image_key(ts, modulus)
            if key not in reps:
                reps[key] = ts
                queue.append(ts)
                if len(reps) > cap:
                    raise ImageCapExceeded(f"Image modulo {modulus} exceeds {cap} elements")
    logger.debug("image modulo %d has %d elements", modulus, len(reps))

    generators: list[Mat2] = []
    seen: set[Mat2] = set()
    for t in reps.values():
        for s in subgroup.generators:
            ts = t * s
            schreier = ts * reps[_image_key(ts, modulus)].inverse()
            if not schreier.is_identity and schreier not in seen:
                seen.add(schreier)
                generators.append(schreier)
    return CongruenceSubgroup(subgroup, modulus, tuple(generators), tuple(reps.values()))
