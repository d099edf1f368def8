"""Named witness suites, as run by ``planelin witness --suite``."""

from __future__ import annotations

import logging
from collections.abc import Callable

from planelin.errors import IsIdentity
from planelin.exactalg import QQ, BiPoly, Mat2
from planelin.planeaut import AutKind, PolyAut, compose_all, inverse, membership
from planelin.witness.cornulier import cornulier_grid
from planelin.witness.gamma import (
    distinctness_suite,
    verify_gamma_relations,
    verify_s_prime_powers,
)
from planelin.witness.hypothesis import hypothesis_H_vdk_witness, hypothesis_H_witness
from planelin.witness.models import RelationCheck, RelationReport, SuiteResult

logger = logging.getLogger(__name__)

SUITES = ("gamma", "hypothesis", "cornulier")


def gamma_suite(length_bound: int) -> SuiteResult:
    """Both relations, the cubic negative control, distinctness and ``S'`` powers."""
    relations = verify_gamma_relations()
    cubic = PolyAut(BiPoly.x(QQ), BiPoly.y(QQ) + BiPoly.monomial(QQ, 1, 3, 0))
    control = verify_gamma_relations(t_override=cubic)
    distinct = distinctness_suite(length_bound)
    powers = verify_s_prime_powers()
    passed = relations.passed and not control.passed and distinct.passed and powers.passed
    return SuiteResult(
        suite="gamma",
        passed=passed,
        reports={
            "relations": relations.model_dump(),
            "negative_control": control.model_dump(),
            "distinctness": distinct.model_dump(),
            "s_prime_powers": powers.model_dump(),
        },
    )


def _outside_b0(phi: PolyAut) -> bool:
    linear = phi.degree <= 1 and phi.fixes_origin
    return not (linear and phi.differential_at_origin().is_lower_triangular)


def hypothesis_suite() -> SuiteResult:
    """Witnesses for sample elements of ``B0`` and ``B``, and the identity control."""
    checks: list[RelationCheck] = []
    samples = [
        Mat2.scalar(QQ, 3),
        Mat2(1, 0, 1, 1, QQ),
        Mat2(1, 0, 0, 2, QQ),
        Mat2(2, 0, 5, -1, QQ),
    ]
    for g in samples:
        gamma = hypothesis_H_witness(g)
        moved = compose_all([gamma, PolyAut.from_linear(g), inverse(gamma)])
        checks.append(
            RelationCheck(
                name=f"witness for {g}", passed=_outside_b0(moved), lhs=str(moved), rhs="outside B0"
            )
        )
    translation = PolyAut.from_linear(Mat2.identity(QQ), (1, 0))
    word = hypothesis_H_vdk_witness(translation)
    gamma = compose_all(word)
    moved = compose_all([gamma, translation, inverse(gamma)])
    checks.append(
        RelationCheck(
            name="witness for a translation",
            passed=membership(moved) is not AutKind.IN_B,
            lhs=str(moved),
            rhs="outside B",
        )
    )
    try:
        hypothesis_H_witness(Mat2.identity(QQ))
        rejected = False
    except IsIdentity:
        rejected = True
    checks.append(
        RelationCheck(name="identity has no witness", passed=rejected, lhs="id", rhs="IsIdentity")
    )
    report = RelationReport(checks=checks)
    return SuiteResult(
        suite="hypothesis", passed=report.passed, reports={"checks": report.model_dump()}
    )


def cornulier_suite() -> SuiteResult:
    report = cornulier_grid()
    return SuiteResult(
        suite="cornulier", passed=report.passed, reports={"grid": report.model_dump()}
    )


def run_suites(name: str, length_bound: int) -> list[SuiteResult]:
    """Run one suite by name, or every suite for ``all``."""
    runners: dict[str, Callable[[], SuiteResult]] = {
        "gamma": lambda: gamma_suite(length_bound),
        "hypothesis": hypothesis_suite,
        "cornulier": cornulier_suite,
    }
    names = SUITES if name == "all" else (name,)
    if any(n not in runners for n in names):
        raise ValueError(f"Unknown suite {name!r}")
    results = [runners[n]() for n in names]
    for result in results:
        logger.info("suite %s: %s", result.suite, "pass" if result.passed else "FAIL")
    return results
