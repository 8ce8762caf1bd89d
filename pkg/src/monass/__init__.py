"""Monomial ideals, their associated primes, and tests for the maximal ideal in Ass(R/I^t)."""

from .assoc import (
    AssSequence,
    AssSet,
    CornerWitness,
    IrreducibleComponent,
    ass_from_decomposition,
    ass_primes,
    ass_sequence,
    corner_elements,
    corner_elements_exhaustive,
    has_maximal_associated,
    irreducible_decomposition,
    is_associated,
    is_corner,
    maximal_in_powers,
    socle_colon,
)
from .criteria import (
    ChainWitness,
    ColonCriterionRequest,
    ColonStep,
    Conclusion,
    CriterionReport,
    SplitDecomposition,
    check_chain_criterion,
    check_colon_criterion_A,
    check_colon_criterion_B,
    check_corner_divisibility,
    check_dichotomy,
    check_squarefree_maximal,
    infer_split,
    verify_split_identities,
)
from .errors import (
    CapExceeded,
    ContextMismatch,
    CriterionViolation,
    DegenerateIdeal,
    ExponentOverflow,
    InvalidPrime,
    MonassError,
    ParseError,
    SplitError,
    limits,
    override_limits,
    set_limits,
)
from .graphs import SimpleGraph, cover_ideal, cycle_graph, edge_ideal, wheel_graph
from .ideal import (
    MonomialIdeal,
    MonomialPrime,
    colon_ideal,
    colon_monomial,
    delete_variable,
    intersect,
    localize_at,
    power,
    radical,
    saturate,
    supp,
)
from .parsing import parse_graph, parse_ideal, parse_ring, parse_script
from .reproduce import reproduce
from .ring import Monomial, RingContext, parse_monomial

__version__ = "0.1.0"
