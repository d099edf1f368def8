"""Witness suites: the faithful group of plane automorphisms, conjugation out of B,
and the square-zero representation."""

from planelin.witness.cornulier import (
    ALPHAS,
    BinomialPoly,
    SquareZeroElt,
    SquareZeroMatrix,
    binom,
    cornulier_grid,
    cornulier_rho1,
    cornulier_rho2,
    verify_cornulier_identity,
    verify_cornulier_literal,
)
from planelin.witness.gamma import (
    LETTERS,
    Letter,
    Syllable,
    distinctness_suite,
    gamma_amalgam,
    gamma_automorphism,
    gamma_generators,
    gamma_h_witness,
    gamma_word,
    parse_letters,
    verify_gamma_relations,
    verify_s_prime_powers,
)
from planelin.witness.hypothesis import hypothesis_H_vdk_witness, hypothesis_H_witness
from planelin.witness.models import (
    Collision,
    CornulierCase,
    CornulierReport,
    DistinctnessReport,
    RelationCheck,
    RelationReport,
    SuiteResult,
)
from planelin.witness.suites import (
    SUITES,
    cornulier_suite,
    gamma_suite,
    hypothesis_suite,
    run_suites,
)

__all__ = [
    "ALPHAS",
    "LETTERS",
    "SUITES",
    "BinomialPoly",
    "Collision",
    "CornulierCase",
    "CornulierReport",
    "DistinctnessReport",
    "Letter",
    "RelationCheck",
    "RelationReport",
    "SquareZeroElt",
    "SquareZeroMatrix",
    "SuiteResult",
    "Syllable",
    "binom",
    "cornulier_grid",
    "cornulier_rho1",
    "cornulier_rho2",
    "cornulier_suite",
    "distinctness_suite",
    "gamma_amalgam",
    "gamma_automorphism",
    "gamma_generators",
    "gamma_h_witness",
    "gamma_suite",
    "gamma_word",
    "hypothesis_H_vdk_witness",
    "hypothesis_H_witness",
    "hypothesis_suite",
    "parse_letters",
    "run_suites",
    "verify_cornulier_identity",
    "verify_cornulier_literal",
    "verify_gamma_relations",
    "verify_s_prime_powers",
]
