"""Run the seeded property suites at full size and print a summary."""

import random
import sys
import time
from collections.abc import Callable
from fractions import Fraction

from planelin.config import settings
from planelin.errors import LawViolation
from planelin.exactalg import QQ, FieldSpec, Mat2
from planelin.linmap import (
    SubgroupSpec,
    classify,
    congruence_subgroup_gens,
    cyclic_section,
    degree_law_check,
    induce_representation,
    pair_set_C,
    psi,
    psi_inv,
    rho_S,
    smallest_admissible_prime,
    trivial_section,
)
from planelin.matpoly import (
    e_generation_factorize,
    generation_steps,
    pingpong_grid,
    verify_pingpong,
)
from planelin.planeaut import PolyAut, compose, compose_all, factorize
from planelin.sampling import random_aut1, random_aut_word, random_e_word, random_tau_word
from planelin.witness import cornulier_grid, gamma_suite

F7 = FieldSpec.prime(7)
U = Mat2(1, 1, 0, 1, QQ)
FIELDS = (QQ, F7)


def vdk_round_trip(rng: random.Random) -> int:
    failures = 0
    for field in FIELDS:
        for _ in range(500):
            phi = compose_all(random_aut_word(field, rng, rng.randint(1, 6)), field)
            if factorize(phi).recompose() != phi:
                failures += 1
    return failures


def psi_homomorphism(rng: random.Random) -> int:
    failures = 0
    for field in FIELDS:
        for _ in range(200):
            phi = random_aut1(field, rng, rng.randint(1, 3))
            chi = random_aut1(field, rng, rng.randint(1, 3))
            g = psi(phi)
            if psi(compose(phi, chi)) != g * psi(chi):
                failures += 1
            if psi_inv(g) != phi or psi(psi_inv(g)) != g:
                failures += 1
    return failures


def generation_uniqueness(rng: random.Random) -> int:
    failures = 0
    for i in range(300):
        field = FIELDS[i % 2]
        word = random_e_word(field, rng, rng.randint(1, 4))
        g = word.recompose()
        if e_generation_factorize(g) != word:
            failures += 1
        degrees = [degree for degree, _ in generation_steps(g)]
        if any(later >= earlier for earlier, later in zip(degrees, degrees[1:])):
            failures += 1
    return failures


def degree_laws(rng: random.Random) -> int:
    failures = 0
    for i in range(200):
        word = random_tau_word(FIELDS[i % 2], rng, rng.randint(1, 4))
        try:
            degree_law_check(word)
        except LawViolation as exc:
            print(f"  {exc}")
            failures += 1
    return failures


def pingpong(rng: random.Random) -> int:
    samples, vectors = pingpong_grid(FieldSpec.prime(3), 3, 3, rng)
    return len(verify_pingpong(samples, vectors).violations)


def witnesses(rng: random.Random) -> int:
    return int(not gamma_suite(6).passed) + int(not cornulier_grid().passed)


def _in_unipotent_group(m: Mat2) -> bool:
    return m.a == 1 and m.d == 1 and m.c == 0 and Fraction(m.b).denominator == 1


def rho_pipeline(rng: random.Random) -> int:
    failures = 0
    section = cyclic_section(SubgroupSpec.of(QQ, [U]))

    def sample() -> tuple[PolyAut, Mat2]:
        power = U ** rng.randint(-3, 3)
        alpha = random_aut1(QQ, rng, rng.randint(1, 2))
        return compose(PolyAut.from_linear(power), alpha), power

    for _ in range(100):
        (phi, d), (chi, _) = sample(), sample()
        g = rho_S(phi, section, contains=_in_unipotent_group)
        h = rho_S(chi, section, contains=_in_unipotent_group)
        if rho_S(compose(phi, chi), section, contains=_in_unipotent_group) != g * h:
            failures += 1
        if g.eval0() != d or ((g == h) != (phi == chi)):
            failures += 1
    return failures


def congruence_pipeline(rng: random.Random) -> int:
    failures = int(smallest_admissible_prime(pair_set_C(12, QQ), 1) != 5)
    unipotent = congruence_subgroup_gens(SubgroupSpec.of(QQ, [U]), 5, settings.image_cap)
    if unipotent.index != 5 or not all(unipotent.contains(g) for g in unipotent.generators):
        failures += 1

    minus_id = Mat2.scalar(QQ, -1)
    congruence = congruence_subgroup_gens(SubgroupSpec.of(QQ, [minus_id]), 5, settings.image_cap)
    section = trivial_section(congruence.subgroup)
    for _ in range(50):
        phi, chi = (
            compose(PolyAut.from_linear(minus_id ** rng.randint(0, 1)), random_aut1(QQ, rng, 2))
            for _ in range(2)
        )
        lhs = induce_representation(compose(phi, chi), congruence, section)
        rhs = induce_representation(phi, congruence, section) * induce_representation(
            chi, congruence, section
        )
        if lhs != rhs:
            failures += 1
    return failures


def classification(rng: random.Random) -> int:
    unipotent = classify(U)
    rotation = classify(Mat2(0, -1, 1, 0, QQ))
    s_prime = classify(Mat2(1, 1, 1, 0, QQ))
    expected = (
        unipotent.unipotent,
        rotation.quasi_order == 4,
        not s_prime.quasi_unipotent,
        not s_prime.k_reducible,
    )
    return sum(not ok for ok in expected)


CHECKS: list[tuple[str, Callable[[random.Random], int]]] = [
    ("van der Kulk round trip", vdk_round_trip),
    ("psi homomorphism and inverse", psi_homomorphism),
    ("E-factorization uniqueness", generation_uniqueness),
    ("degree laws", degree_laws),
    ("ping-pong over F_3", pingpong),
    ("Gamma and square-zero witnesses", witnesses),
    ("rho_S for <U>", rho_pipeline),
    ("congruence and induction", congruence_pipeline),
    ("classification table", classification),
]


def main() -> None:
    seed = settings.property_seed
    print(f"seed: {seed}\n")
    total = 0
    for name, check in CHECKS:
        start = time.perf_counter()
        failures = check(random.Random(seed))
        elapsed = time.perf_counter() - start
        total += failures
        status = "ok" if failures == 0 else f"{failures} FAILURES"
        print(f"  {name:<34} {status:<14} {elapsed:6.2f}s")
    print(f"\n{'all passed' if total == 0 else f'{total} failures'}")
    sys.exit(1 if total else 0)


if __name__ == "__main__":
    main()
