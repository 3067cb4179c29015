"""Exact invariants of projective monomial curves.

Core objects: numerical semigroups (membership, Frobenius number, Apery
sets, pseudo-Frobenius elements, factorizations), the affine semigroup of
a projective monomial curve in N^2, generators of the derivation module of
its coordinate ring (search engine plus closed forms, cross-validated),
and the Hilbert-Kunz multiplicity (closed formula plus staircase-colength
route, exact rationals throughout).
"""

from .curve2 import CurveSemigroup, Point2, lattice_index
from .deriv import (
    CrossValidation,
    DerivationBasis,
    DerivationGenerator,
    Target,
    cross_validate,
    d1_generators_brute,
    d2_generators_brute,
    default_search_cap,
    derivation_generators_arithmetic,
    derivation_generators_brute,
    derivation_generators_p1,
    mu_expected,
)
from .errors import (
    BoxOverflow,
    CmNotAssumed,
    GcdNotOne,
    InputError,
    MonocurveError,
    NotInSemigroup,
    NotMinimalArithmetic,
    PTooSmall,
    SearchCapExceeded,
    TypeUndefinedForNaturals,
)
from .hk import (
    StaircaseReport,
    frobenius_power_colength,
    hk_arithmetic,
    hk_closed,
    hk_via_eto,
    staircase_colength,
)
from .numsemi import (
    ArithmeticData,
    Factorization,
    NumericalSemigroup,
    arithmetic_decomposition,
    arithmetic_sequence,
    pf_arithmetic,
)

__version__ = "0.1.0"

__all__ = [
    "ArithmeticData",
    "BoxOverflow",
    "CmNotAssumed",
    "CrossValidation",
    "CurveSemigroup",
    "DerivationBasis",
    "DerivationGenerator",
    "Factorization",
    "GcdNotOne",
    "InputError",
    "MonocurveError",
    "NotInSemigroup",
    "NotMinimalArithmetic",
    "NumericalSemigroup",
    "PTooSmall",
    "Point2",
    "SearchCapExceeded",
    "StaircaseReport",
    "Target",
    "TypeUndefinedForNaturals",
    "arithmetic_decomposition",
    "arithmetic_sequence",
    "cross_validate",
    "d1_generators_brute",
    "d2_generators_brute",
    "default_search_cap",
    "derivation_generators_arithmetic",
    "derivation_generators_brute",
    "derivation_generators_p1",
    "frobenius_power_colength",
    "hk_arithmetic",
    "hk_closed",
    "hk_via_eto",
    "lattice_index",
    "mu_expected",
    "pf_arithmetic",
    "staircase_colength",
]
