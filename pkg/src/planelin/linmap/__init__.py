"""Linear representations: psi, matrix classification, rho_S and its induction."""

from planelin.linmap.classify import (
    check_hypothesis_QU,
    check_hypothesis_U,
    classify,
    is_k_reducible,
    is_unipotent,
    quasi_order,
    quasi_order_bound,
)
from planelin.linmap.congruence import (
    CongruenceSubgroup,
    congruence_modulus,
    congruence_subgroup_gens,
    denominator_bound,
    pair_set_C,
    smallest_admissible_prime,
    smallest_irreducible_quadratic,
)
from planelin.linmap.induce import induce_representation
from planelin.linmap.models import Classification, DegreeLawResult, Hypothesis, HypothesisVerdict
from planelin.linmap.psi import degree_law_check, psi, psi_factor, psi_inv, psi_word
from planelin.linmap.rho import rho_factor, rho_S
from planelin.linmap.sections import (
    BFSSection,
    CyclicSection,
    OrbitSection,
    SectionMode,
    TrivialSection,
    acts_trivially,
    bfs_section,
    check_section,
    check_stabilizers,
    cyclic_section,
    section_for,
    trivial_section,
)
from planelin.linmap.subgroup import SubgroupSpec, Word, invert_word, power_word

__all__ = [
    "BFSSection",
    "Classification",
    "CongruenceSubgroup",
    "CyclicSection",
    "DegreeLawResult",
    "Hypothesis",
    "HypothesisVerdict",
    "OrbitSection",
    "SectionMode",
    "SubgroupSpec",
    "TrivialSection",
    "Word",
    "acts_trivially",
    "bfs_section",
    "check_hypothesis_QU",
    "check_hypothesis_U",
    "check_section",
    "check_stabilizers",
    "classify",
    "congruence_modulus",
    "congruence_subgroup_gens",
    "cyclic_section",
    "degree_law_check",
    "denominator_bound",
    "induce_representation",
    "invert_word",
    "is_k_reducible",
    "is_unipotent",
    "pair_set_C",
    "power_word",
    "psi",
    "psi_factor",
    "psi_inv",
    "psi_word",
    "quasi_order",
    "quasi_order_bound",
    "rho_S",
    "rho_factor",
    "section_for",
    "smallest_admissible_prime",
    "smallest_irreducible_quadratic",
    "trivial_section",
]
