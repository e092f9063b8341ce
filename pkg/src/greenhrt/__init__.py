"""Exact hyperplane-restriction bounds for graded modules.

Core pieces: Macaulay binomial representations and the numerator-decrement
operator, the piecewise restriction bound for quotients of graded free
modules, lexicographic module slices with exact specialization counts, a
prime-field oracle certifying sampled restriction dimensions, brute-force
verifiers for every inequality, and the level-algebra bound comparison.
"""

from .bounds import (
    BoundBreakdown,
    CapacityError,
    FreeModuleShape,
    braced_bound,
    green_bound,
    module_bound,
    rank2_bound,
    scaled_bound,
)
from .level import (
    LevelComparison,
    LevelHilbert,
    PropositionCheck,
    TheoremViolation,
    compare_bounds,
    compute_hG,
    compute_hGM,
    load_level_table,
    proposition_conditions,
    reproduce_table,
)
from .macaulay import MacaulayRep, binomial, kappa, macaulay_rep, rep_compare, rep_value
from .monomials import (
    ModuleMonomial,
    MonomialIdeal,
    MonomialModule,
    deglex_compare,
    enumerate_module_monomials,
    enumerate_monomials,
    hilbert_value_module,
    lex_module_slice,
    lex_segment,
    module_from_data,
    module_from_slice,
    module_to_data,
    random_monomial_module,
    restrict_xn_count,
    revlex_compare,
)
from .oracle import (
    PrimeFieldMatrix,
    RestrictionReport,
    certify_main_theorem,
    generic_restriction_dim,
    restricted_quotient_dim,
)
from .verifiers import (
    VerificationOutcome,
    check_herz_tail,
    check_higher,
    check_kappa_lemma,
    check_lex_restriction,
    check_rank2,
    check_scaled_corollary,
    nonincreasing_tuples,
)

__version__ = "0.1.0"

__all__ = [
    "BoundBreakdown",
    "CapacityError",
    "FreeModuleShape",
    "LevelComparison",
    "LevelHilbert",
    "MacaulayRep",
    "ModuleMonomial",
    "MonomialIdeal",
    "MonomialModule",
    "PrimeFieldMatrix",
    "PropositionCheck",
    "RestrictionReport",
    "TheoremViolation",
    "VerificationOutcome",
    "binomial",
    "braced_bound",
    "certify_main_theorem",
    "check_herz_tail",
    "check_higher",
    "check_kappa_lemma",
    "check_lex_restriction",
    "check_rank2",
    "check_scaled_corollary",
    "compare_bounds",
    "compute_hG",
    "compute_hGM",
    "deglex_compare",
    "enumerate_module_monomials",
    "enumerate_monomials",
    "generic_restriction_dim",
    "green_bound",
    "hilbert_value_module",
    "kappa",
    "lex_module_slice",
    "lex_segment",
    "load_level_table",
    "macaulay_rep",
    "module_bound",
    "module_from_data",
    "module_from_slice",
    "module_to_data",
    "nonincreasing_tuples",
    "proposition_conditions",
    "random_monomial_module",
    "rank2_bound",
    "rep_compare",
    "rep_value",
    "reproduce_table",
    "restrict_xn_count",
    "restricted_quotient_dim",
    "revlex_compare",
    "scaled_bound",
]
