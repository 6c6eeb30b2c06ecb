"""
Regression corpus of worked examples with their known answers.

Every entry is written in the text grammar, so running the corpus also
exercises the parser. :func:`run_selftest` evaluates all of it and returns a
:class:`~monideal.formats.CheckTable`; the CLI ``selftest`` subcommand, the
batch script and the tests all consume the same constants.
"""

import logging
import time
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Iterator, List, Optional, Tuple

from .base import MonomialIdeal, equals, intersect, power
from .cache import PowerCache
from .decomposition import associated_primes
from .errors import MonomialIdealError
from .formats import CheckResult, CheckTable, from_json, to_json
from .operators import ExpansionSpec, WeightSpec, expand, weight
from .parser import parse_ideal, parse_prime, parse_ring, print_canonical
from .persistence import (
    FAMILY_RING,
    ass_powers,
    ass_witness_check,
    colon_pattern,
    detect_fluctuation,
    family_lmr,
    general_colon_power,
    observed_spi,
    spi_witness_check,
)

logger = logging.getLogger(__name__)

# -----------------------------------------------------------------------------
# colon-power patterns

@dataclass(frozen=True)
class PatternCase:
    """An ideal with its known colon pattern and derived verdicts."""

    name: str
    ring: str
    ideal: str
    horizon: int
    entries: Tuple[str, ...]
    observed_spi: int
    case_i: Optional[Tuple[int, int, int]]
    case_ii: Optional[Tuple[int, int, int]]

    def parse(self) -> MonomialIdeal:
        return parse_ideal(self.ideal, parse_ring(self.ring))


PATTERN_CASES = [
    PatternCase("xy6_single_drop_run", "x, y", "x^6, y^6, x*y^5, x^5*y, x^4*y^4", 5,
                ("eq", "neq", "neq", "eq"), 4, (1, 3, 5), None),
    PatternCase("xy7_both_ways", "x, y", "x^7, y^7, x^2*y^5, x^5*y^2", 5,
                ("neq", "eq", "neq", "eq"), 4, (1, 2, 3), (2, 3, 4)),
    PatternCase("xyz_twelve_generators", "x, y, z",
                "x^8*y^5, x^7*y^9, x^6*y^10, x^4*y^11, x^13*y^3*z^2, x^8*y^4*z^2, x^6*y^9*z^2, "
                "x^13*y^2*z^3, x^4*y^9*z^3, x^4*y^4*z^5, y^5*z^7, x^13*z^8", 5,
                ("eq", "neq", "eq", "eq"), 3, (1, 3, 4), None),
    PatternCase("principal", "x, y", "x^3*y", 5, ("eq",) * 4, 1, None, None),
]

# -----------------------------------------------------------------------------
# the (m, r) family

FAMILY_GRID = [(m, r) for m in (1, 2, 3) for r in (1, 2)]

# its components at m = r = 1, as found by hand
FAMILY_COMPONENTS = ["x, y^4", "x^4, y", "x^2, y^3", "x^3, y^2", "x^3, y^3, z"]


def expected_family_ass(m: int, s: int) -> List[str]:
    """``{(x,y), (x,y,z)}`` while ``s ≤ m``, then ``{(x,y)}``."""
    return ["(x, y)", "(x, y, z)"] if s <= m else ["(x, y)"]


# -----------------------------------------------------------------------------
# operators

@dataclass(frozen=True)
class OperatorCase:
    name: str
    ring: str
    ideal: str
    parameters: Tuple[int, ...]
    target_ring: str
    expected: str


EXPANSION_CASE = OperatorCase(
    "expansion_3_1_2", "x1, x2, x3", "x1^3, x2*x3^2, x1*x3", (3, 1, 2),
    "x1_1, x1_2, x1_3, x2_1, x3_1, x3_2",
    "x1_1^3, x1_2^3, x1_3^3, x1_1^2*x1_2, x1_1^2*x1_3, x1_2^2*x1_1, x1_2^2*x1_3, "
    "x1_3^2*x1_1, x1_3^2*x1_2, x1_1*x1_2*x1_3, x2_1*x3_1^2, x2_1*x3_2^2, x2_1*x3_1*x3_2, "
    "x1_1*x3_1, x1_1*x3_2, x1_2*x3_1, x1_2*x3_2, x1_3*x3_1, x1_3*x3_2",
)

WEIGHT_CASE = OperatorCase(
    "weight_1_4_2_3_2", "x1, x2, x3, x4, x5",
    "x1^2*x3*x4^5, x2^4*x4^3*x5^2, x1*x3^2, x4*x5^3", (1, 4, 2, 3, 2),
    "x1, x2, x3, x4, x5",
    "x1^2*x3^2*x4^15, x2^16*x4^9*x5^4, x1*x3^4, x4^3*x5^6",
)


def corpus_ideals() -> Iterator[MonomialIdeal]:
    """Every ideal named in the corpus, for round-trip checks."""
    for case in PATTERN_CASES:
        yield case.parse()
    for m, r in FAMILY_GRID:
        yield family_lmr(m, r)
    for text in FAMILY_COMPONENTS:
        yield parse_ideal(text, FAMILY_RING)
    for case in (EXPANSION_CASE, WEIGHT_CASE):
        yield parse_ideal(case.ideal, parse_ring(case.ring))
        yield parse_ideal(case.expected, parse_ring(case.target_ring))


# -----------------------------------------------------------------------------
# checks

Check = Callable[[Optional[PowerCache], Optional[int]], Tuple[bool, str]]


def _pattern_check(case: PatternCase) -> Check:
    def check(cache, workers):
        pattern = colon_pattern(case.parse(), case.horizon, cache, workers)
        verdict = detect_fluctuation(pattern)
        found = (tuple(pattern.labels()), observed_spi(pattern).observed_spi, verdict.case_i, verdict.case_ii)
        wanted = (case.entries, case.observed_spi, case.case_i, case.case_ii)
        return found == wanted, f"pattern {'/'.join(found[0])}, spi {found[1]}, witnesses {found[2]} {found[3]}"
    return check


def _family_spi_check(m: int, r: int) -> Check:
    def check(cache, workers):
        pattern = colon_pattern(family_lmr(m, r), m + 3, cache, workers)
        spi = observed_spi(pattern).observed_spi
        failing = [ell for ell in range(1, m + 3) if not pattern[ell]]
        return spi == m + 1 and failing == list(range(1, m + 1)), f"spi {spi}, neq at {failing}"
    return check


def _family_witness_check(m: int, r: int) -> Check:
    def check(cache, workers):
        spi_ok = [s for s in range(2, m + 2) if spi_witness_check(m, s, r, cache)]
        ass_ok = [s for s in range(1, m + 1) if ass_witness_check(m, r, s, cache)]
        passed = spi_ok == list(range(2, m + 2)) and ass_ok == list(range(1, m + 1))
        return passed, f"spi witnesses hold at s={spi_ok}, Ass witnesses at s={ass_ok}"
    return check


def _family_ass_check(m: int, r: int) -> Check:
    def check(cache, workers):
        scan = ass_powers(family_lmr(m, r), m + 2, cache)
        found = [sorted(print_canonical(p) for p in primes) for _, primes in scan]
        wanted = [expected_family_ass(m, s) for s in range(1, m + 3)]
        return found == wanted, "; ".join(" ".join(entry) for entry in found)
    return check


def _family_colon_power_check(cache, workers) -> Tuple[bool, str]:
    L = family_lmr(1, 1)
    found = general_colon_power(L, 5, 3, cache)
    return equals(found, power(L, 2, cache)), f"{len(found)} generators"


def _decomposition_check(cache, workers) -> Tuple[bool, str]:
    L = family_lmr(1, 1)
    components = [parse_ideal(text, FAMILY_RING) for text in FAMILY_COMPONENTS]
    recomposed = reduce(intersect, components)
    ass = sorted(print_canonical(p) for p in associated_primes(L))
    return equals(recomposed, L) and ass == expected_family_ass(1, 1), f"Ass {ass}"


def _expansion_check(cache, workers) -> Tuple[bool, str]:
    case = EXPANSION_CASE
    spec = ExpansionSpec(parse_ring(case.ring), case.parameters)
    found = expand(parse_ideal(case.ideal, spec.source), spec)
    wanted = parse_ideal(case.expected, parse_ring(case.target_ring))
    return found == wanted and len(found) == 19, f"{len(found)} generators"


def _weight_check(cache, workers) -> Tuple[bool, str]:
    case = WEIGHT_CASE
    ring = parse_ring(case.ring)
    found = weight(parse_ideal(case.ideal, ring), WeightSpec(case.parameters))
    return found == parse_ideal(case.expected, ring), print_canonical(found)


def _round_trip_check(cache, workers) -> Tuple[bool, str]:
    bad = [
        print_canonical(I) for I in corpus_ideals()
        if parse_ideal(print_canonical(I), I.ring) != I or from_json(to_json(I)) != I
    ]
    maximal = parse_prime("(x, y, z)", FAMILY_RING)
    ok = not bad and from_json(to_json(maximal)) == maximal
    return ok, f"failed on {bad}" if bad else "all corpus ideals"


def selftest_checks() -> List[Tuple[str, Check]]:
    checks: List[Tuple[str, Check]] = [(f"pattern:{c.name}", _pattern_check(c)) for c in PATTERN_CASES]
    for m, r in FAMILY_GRID:
        checks.append((f"family_spi:m={m},r={r}", _family_spi_check(m, r)))
        checks.append((f"family_witness:m={m},r={r}", _family_witness_check(m, r)))
        checks.append((f"family_ass:m={m},r={r}", _family_ass_check(m, r)))
    checks += [
        ("family_colon_power:m=1,r=1", _family_colon_power_check),
        ("family_decomposition:m=1,r=1", _decomposition_check),
        (EXPANSION_CASE.name, _expansion_check),
        (WEIGHT_CASE.name, _weight_check),
        ("round_trip", _round_trip_check),
    ]
    return checks


def run_selftest(cache: Optional[PowerCache] = None, workers: Optional[int] = None) -> CheckTable:
    """Evaluate the whole corpus; a raised error counts as a failure."""
    results = []
    for name, check in selftest_checks():
        t0 = time.time()
        try:
            passed, detail = check(cache, workers)
        except MonomialIdealError as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        logger.info("%s %s in %.2fs", name, "ok" if passed else "FAILED", time.time() - t0)
        results.append(CheckResult(name, passed, detail))
    return CheckTable("selftest", tuple(results))
