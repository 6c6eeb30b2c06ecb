"""
monideal: exact computation on monomial ideals.

Monomial ideals are held as minimal generating sets over a named ring.
The package computes powers, colons, intersections, radicals, irreducible
and primary decompositions and associated primes. It also provides the
expansion, weighting and localization operators, and scans colon powers for
the strong persistence index and for fluctuation.

Examples
--------
>>> from monideal import parse_ring, parse_ideal, colon_pattern, detect_fluctuation
>>> ring = parse_ring("x, y")
>>> J = parse_ideal("x^7, y^7, x^2*y^5, x^5*y^2", ring)
>>> verdict = detect_fluctuation(colon_pattern(J, 5))
>>> verdict.case_ii, verdict.verdict.value
((2, 3, 4), 'both')

>>> from monideal import family_lmr, observed_spi
>>> observed_spi(colon_pattern(family_lmr(2, 1), 5)).observed_spi
3

See Also
--------
monideal.base : monomials, ideals and their arithmetic
monideal.decomposition : irreducible decomposition and associated primes
monideal.operators : expansion, weighting and monomial localization
monideal.persistence : colon pattern scans and the parametric families
monideal.parser : text grammar and canonical printing
monideal.formats : JSON documents
"""

__version__ = "0.1.0"

from .base import (
    MAX_EXPONENT,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    Ring,
    colon,
    colon_by_monomial,
    contains,
    divide,
    equals,
    gcd,
    intersect,
    is_member,
    lcm,
    minimalize,
    power,
    product,
    radical,
    support,
)
from .cache import PowerCache
from .decomposition import (
    Decomposition,
    IrreducibleComponent,
    associated_primes,
    ass_witness,
    embedded_primes,
    irreducible_decomposition,
    minimal_primes,
    primary_decomposition,
)
from .errors import (
    DegenerateIdealError,
    ExponentOverflowError,
    MonomialIdealError,
    NotDivisibleError,
    ParseError,
    RingMismatchError,
    SchemaError,
    ZeroIdealError,
)
from .formats import from_json, to_json
from .operators import (
    ExpansionSpec,
    WeightSpec,
    containment_via_localization,
    embed,
    expand,
    expand_prime,
    ideal_sum,
    lift,
    localize,
    weight,
)
from .parser import parse_ideal, parse_monomial, parse_prime, parse_ring, print_canonical
from .persistence import (
    ColonPattern,
    FluctuationVerdict,
    SpiReport,
    ass_powers,
    ass_stability,
    colon_pattern,
    detect_fluctuation,
    family_lmr,
    general_colon_power,
    observed_spi,
    power_spi_bound,
    spi_witness_check,
)

__all__ = [
    "Ring", "Monomial", "MonomialIdeal", "MonomialPrime", "MAX_EXPONENT",
    "gcd", "lcm", "divide", "minimalize", "is_member", "contains", "equals",
    "product", "power", "colon", "colon_by_monomial", "intersect", "radical", "support",
    "PowerCache",
    "Decomposition", "IrreducibleComponent", "irreducible_decomposition", "associated_primes",
    "minimal_primes", "embedded_primes", "primary_decomposition", "ass_witness",
    "ExpansionSpec", "WeightSpec", "ideal_sum", "expand", "expand_prime", "weight", "lift",
    "localize", "embed", "containment_via_localization",
    "ColonPattern", "SpiReport", "FluctuationVerdict", "colon_pattern", "observed_spi",
    "detect_fluctuation", "ass_powers", "ass_stability", "general_colon_power",
    "power_spi_bound", "family_lmr", "spi_witness_check",
    "parse_ring", "parse_monomial", "parse_ideal", "parse_prime", "print_canonical",
    "to_json", "from_json",
    "MonomialIdealError", "RingMismatchError", "ExponentOverflowError", "NotDivisibleError",
    "ZeroIdealError", "DegenerateIdealError", "ParseError", "SchemaError",
]
