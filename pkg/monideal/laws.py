"""
Randomized checks of the algebraic laws the operators must satisfy.

Expansion, weighting and monomial localization commute with sums,
products, intersections and colons; containment can be decided locally at
the associated primes; and expansion and weighting leave colon patterns
unchanged. :func:`run_law_checks` draws small random ideals from a seeded
generator and reports, per law, how many instances held.

Examples
--------
>>> from monideal.laws import run_law_checks
>>> run_law_checks(seed=0, instances=5).passed
True
"""

import logging
from typing import Callable, List, Optional, Tuple

import numpy as np

from .base import MonomialIdeal, MonomialPrime, Ring, colon, contains, intersect, product
from .cache import PowerCache
from .errors import MonomialIdealError
from .formats import CheckResult, CheckTable, from_json, to_json
from .operators import (
    ExpansionSpec,
    WeightSpec,
    containment_via_localization,
    expand,
    ideal_sum,
    localize,
    weight,
)
from .parser import parse_ideal, print_canonical
from .persistence import colon_pattern

logger = logging.getLogger(__name__)

RANDOM_RINGS = [Ring(("x",)), Ring(("x", "y")), Ring(("x", "y", "z"))]
MAX_GENERATORS = 4
MAX_RANDOM_EXPONENT = 4
TRANSFER_HORIZON = 4
DEFAULT_INSTANCES = 200

BINARY_OPERATIONS = {
    "sum": ideal_sum,
    "product": product,
    "intersect": intersect,
    "colon": colon,
}


def random_ideal(rng: np.random.Generator, ring: Ring,
                 max_generators: int = MAX_GENERATORS,
                 max_exponent: int = MAX_RANDOM_EXPONENT,
                 proper: bool = False) -> MonomialIdeal:
    """Draw a nonzero ideal with at most ``max_generators`` generators."""
    k = int(rng.integers(1, max_generators + 1))
    rows = rng.integers(0, max_exponent + 1, size=(k, ring.n))
    if proper:
        # a zero row would make the ideal the unit ideal
        rows[rows.sum(axis=1) == 0, 0] = 1
    return MonomialIdeal.from_exponents(ring, rows.tolist())


def random_prime(rng: np.random.Generator, ring: Ring) -> MonomialPrime:
    mask = rng.integers(0, 2, size=ring.n).astype(bool)
    mask[rng.integers(0, ring.n)] = True
    return MonomialPrime(ring, tuple(np.flatnonzero(mask).tolist()))


def random_expansion(rng: np.random.Generator, ring: Ring, max_count: int = 2) -> ExpansionSpec:
    return ExpansionSpec(ring, tuple(rng.integers(1, max_count + 1, size=ring.n).tolist()))


def random_weights(rng: np.random.Generator, n: int, max_weight: int = 4) -> WeightSpec:
    return WeightSpec(tuple(rng.integers(1, max_weight + 1, size=n).tolist()))


# -----------------------------------------------------------------------------
# single-instance laws; each returns True when the law holds

Law = Callable[[np.random.Generator, Optional[PowerCache]], bool]


def _pair(rng: np.random.Generator) -> Tuple[MonomialIdeal, MonomialIdeal]:
    ring = RANDOM_RINGS[int(rng.integers(0, len(RANDOM_RINGS)))]
    return random_ideal(rng, ring), random_ideal(rng, ring)


def _commutes(transport: Callable[[MonomialIdeal], MonomialIdeal],
              I: MonomialIdeal, J: MonomialIdeal) -> bool:
    TI, TJ = transport(I), transport(J)
    return all(transport(op(I, J)) == op(TI, TJ) for op in BINARY_OPERATIONS.values())


def expansion_law(rng, cache) -> bool:
    I, J = _pair(rng)
    spec = random_expansion(rng, I.ring)
    return _commutes(lambda K: expand(K, spec), I, J)


def weighting_law(rng, cache) -> bool:
    I, J = _pair(rng)
    spec = random_weights(rng, I.ring.n)
    return _commutes(lambda K: weight(K, spec), I, J)


def localization_law(rng, cache) -> bool:
    I, J = _pair(rng)
    p = random_prime(rng, I.ring)
    return _commutes(lambda K: localize(K, p), I, J)


def local_containment_law(rng, cache) -> bool:
    I, J = _pair(rng)
    if I.is_unit:
        return contains(I, J)
    return containment_via_localization(J, I) == contains(I, J)


def transfer_law(rng, cache) -> bool:
    ring = RANDOM_RINGS[int(rng.integers(1, len(RANDOM_RINGS)))]
    I = random_ideal(rng, ring, max_exponent=3, proper=True)
    expanded = expand(I, random_expansion(rng, ring))
    weighted = weight(I, random_weights(rng, ring.n, max_weight=3))
    labels = [
        colon_pattern(K, TRANSFER_HORIZON, cache, workers=1).labels()
        for K in (I, expanded, weighted)
    ]
    return labels[0] == labels[1] == labels[2]


def round_trip_law(rng, cache) -> bool:
    I, _ = _pair(rng)
    return parse_ideal(print_canonical(I), I.ring) == I and from_json(to_json(I)) == I


LAWS: List[Tuple[str, Law]] = [
    ("expansion_commutes", expansion_law),
    ("weighting_commutes", weighting_law),
    ("localization_commutes", localization_law),
    ("containment_is_local", local_containment_law),
    ("pattern_transfers", transfer_law),
    ("text_and_json_round_trip", round_trip_law),
]


def run_law_checks(seed: int = 0, instances: int = DEFAULT_INSTANCES,
                   cache: Optional[PowerCache] = None) -> CheckTable:
    """Check every law on ``instances`` random draws from ``seed``.

    Each law gets its own generator derived from ``seed``, so the instances
    of one law do not depend on how many draws another law consumed.
    """
    if instances < 1:
        raise MonomialIdealError(f"instances must be positive, got {instances}")
    results = []
    streams = np.random.SeedSequence(seed).spawn(len(LAWS))
    for (name, law), stream in zip(LAWS, streams):
        rng = np.random.default_rng(stream)
        failures = [k for k in range(instances) if not law(rng, cache)]
        if failures:
            logger.warning("%s failed on instances %s", name, failures[:10])
        detail = f"{instances - len(failures)}/{instances} held (seed {seed})"
        results.append(CheckResult(name, not failures, detail))
    return CheckTable("check", tuple(results))
