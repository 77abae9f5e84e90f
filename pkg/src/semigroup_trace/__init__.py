"""Exact calculator for monomial fractional ideals of numerical semigroup
rings: duals, traces, integral closures, reflexivity checks and exhaustive
verification sweeps."""

from .errors import (
    ClosureViolation,
    EmptyGenerators,
    GcdNotOne,
    NotContained,
    NotIntegral,
    NotMember,
    PreconditionFailed,
    RegularRing,
    ResourceLimit,
    RingMismatch,
    SemigroupTraceError,
    VerificationError,
)
from .ideal import (
    ValueIdeal,
    conductor_ideal,
    from_exponents,
    from_value_set,
    maximal_ideal,
    principal_ideal,
    unit_ideal,
)
from .semigroup import NumericalSemigroup, enumerate_semigroups, new_semigroup
from .trace import (
    ExtensionRing,
    IdealProfile,
    build_profile,
    colon_in_R,
    conductor_of_extension,
    endomorphism_ring,
    is_minimal_multiplicity,
    is_reflexive,
    is_stable_ideal,
    is_trace_ideal,
    monomial_partial_trace,
    normalization,
    partial_trace_criterion,
    trace_ideal,
    verify_chain,
)
from .verify import (
    SearchRecord,
    SuiteResult,
    check_integrally_closed_containing_C,
    check_trace_of_reflexive,
    check_trace_reflexive_smallcolength,
    colength_R_mod_C,
    enumerate_monomial_ideals,
    reproduce_counterexample,
    run_all_suites,
    search_counterexamples,
)

__version__ = "0.1.0"

__all__ = [
    "ClosureViolation",
    "EmptyGenerators",
    "ExtensionRing",
    "GcdNotOne",
    "IdealProfile",
    "NotContained",
    "NotIntegral",
    "NotMember",
    "NumericalSemigroup",
    "PreconditionFailed",
    "RegularRing",
    "ResourceLimit",
    "RingMismatch",
    "SearchRecord",
    "SemigroupTraceError",
    "SuiteResult",
    "ValueIdeal",
    "VerificationError",
    "build_profile",
    "check_integrally_closed_containing_C",
    "check_trace_of_reflexive",
    "check_trace_reflexive_smallcolength",
    "colength_R_mod_C",
    "colon_in_R",
    "conductor_ideal",
    "conductor_of_extension",
    "endomorphism_ring",
    "enumerate_monomial_ideals",
    "enumerate_semigroups",
    "from_exponents",
    "from_value_set",
    "is_minimal_multiplicity",
    "is_reflexive",
    "is_stable_ideal",
    "is_trace_ideal",
    "maximal_ideal",
    "monomial_partial_trace",
    "new_semigroup",
    "normalization",
    "partial_trace_criterion",
    "principal_ideal",
    "reproduce_counterexample",
    "run_all_suites",
    "search_counterexamples",
    "trace_ideal",
    "unit_ideal",
    "verify_chain",
]
