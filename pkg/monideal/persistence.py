"""
Colon-power scans: strong persistence index, fluctuation and Ass stability.

For a monomial ideal ``I`` the strong persistence index ``ℓ₀`` is the
smallest integer with ``(I^{ℓ+1} : I) = I^ℓ`` for every ``ℓ ≥ ℓ₀``. No
effective bound on ``ℓ₀`` is known, so everything here is observed over a
finite horizon ``L``: :func:`colon_pattern` records the equality for
``ℓ = 1..L-1`` and the reports derived from it are never certified.

The module also provides the parametric family

    ``L_{m,r} = (x^{m+3}, y^{m+3}, x^{m+2}y, xy^{m+2}, x^{m+1}y^2z^r)``

whose strong persistence index is ``m + 1``, with the witnesses that prove
it, and the expansion/weighting lifts that turn one example into infinitely
many.

Examples
--------
>>> from monideal.persistence import family_lmr, colon_pattern, observed_spi
>>> report = observed_spi(colon_pattern(family_lmr(1, 1), 4))
>>> report.observed_spi, report.certified
(2, False)
"""

import logging
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, List, Optional, Tuple

from .base import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    Ring,
    colon,
    colon_by_monomial,
    contains,
    equals,
    is_member,
    power,
)
from .cache import PowerCache, default_power_cache
from .decomposition import associated_primes
from .errors import DegenerateIdealError, MonomialIdealError
from .operators import ExpansionSpec, WeightSpec, lift

logger = logging.getLogger(__name__)

DEFAULT_HORIZON = 6

Triple = Tuple[int, int, int]


# -----------------------------------------------------------------------------
# reports

@dataclass(frozen=True)
class ColonPattern:
    """Equality record ``d_ℓ = [(I^{ℓ+1} : I) = I^ℓ]`` for ``ℓ = 1..L-1``.

    ``ℓ = 0`` is not stored: ``(I : I) = R = I^0`` holds for every ideal.

    Attributes
    ----------
    fingerprint : str
        Fingerprint of the scanned ideal.
    horizon : int
        ``L ≥ 2``; the largest power involved is ``I^L``.
    entries : Tuple[bool, ...]
        ``entries[ℓ-1]`` is ``d_ℓ``.

    Examples
    --------
    >>> pattern = ColonPattern("demo", 5, (True, False, False, True))
    >>> pattern.labels()
    ['eq', 'neq', 'neq', 'eq']
    >>> pattern[2]
    False
    """

    fingerprint: str
    horizon: int
    entries: Tuple[bool, ...]

    def __post_init__(self):
        entries = tuple(bool(e) for e in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.horizon < 2:
            raise MonomialIdealError(f"horizon must be at least 2, got {self.horizon}")
        if len(entries) != self.horizon - 1:
            raise MonomialIdealError(
                f"a horizon-{self.horizon} pattern has {self.horizon - 1} entries, got {len(entries)}"
            )

    def __getitem__(self, ell: int) -> bool:
        if not 1 <= ell < self.horizon:
            raise IndexError(f"d_{ell} outside 1..{self.horizon - 1}")
        return self.entries[ell - 1]

    def labels(self) -> List[str]:
        return ["eq" if e else "neq" for e in self.entries]

    def colon_holds(self, a: int) -> bool:
        """``(I^a : I) = I^{a-1}``, for ``1 ≤ a ≤ L``; true at ``a = 1``."""
        return a == 1 or self[a - 1]


@dataclass(frozen=True)
class SpiReport:
    """Strong persistence index as observed within a horizon.

    Attributes
    ----------
    pattern : ColonPattern
        The scan the report was derived from.
    observed_spi : int
        ``1 + max{ℓ : d_ℓ = neq}``, or 1 when every entry is equal.
    trailing_equal_run : int
        Number of consecutive equal entries ending at ``ℓ = L-1``.
    certified : bool
        Always False; nothing beyond the horizon is verified.
    """

    pattern: ColonPattern
    observed_spi: int
    trailing_equal_run: int
    certified: bool = False

    @property
    def horizon(self) -> int:
        return self.pattern.horizon

    @property
    def strong_persistence(self) -> bool:
        """All entries equal, i.e. the strong persistence property as far as observed."""
        return self.observed_spi == 1


class FluctuationKind(Enum):
    NONE = "none"
    CASE_I = "case_i"
    CASE_II = "case_ii"
    BOTH = "both"


@dataclass(frozen=True)
class FluctuationVerdict:
    """Lexicographically minimal fluctuation witnesses within a horizon.

    Case (i): ``(I^a:I) = I^{a-1}``, ``(I^b:I) ≠ I^{b-1}``, ``(I^c:I) = I^{c-1}``.
    Case (ii): the same with every relation negated. Always ``a < b < c ≤ L``.
    """

    pattern: ColonPattern
    case_i: Optional[Triple]
    case_ii: Optional[Triple]

    @property
    def verdict(self) -> FluctuationKind:
        if self.case_i and self.case_ii:
            return FluctuationKind.BOTH
        if self.case_i:
            return FluctuationKind.CASE_I
        if self.case_ii:
            return FluctuationKind.CASE_II
        return FluctuationKind.NONE

    @property
    def fluctuates(self) -> bool:
        return self.verdict is not FluctuationKind.NONE


@dataclass(frozen=True)
class AssStability:
    """Observed stabilization of ``Ass(R/I^s)`` for ``s ≤ s_max``.

    ``index`` is the smallest ``s₀`` with ``Ass(I^s) = Ass(I^{s_max})`` for
    all ``s₀ ≤ s ≤ s_max``; ``stable_set`` is ``Ass(I^{s_max})``.
    """

    index: int
    stable_set: FrozenSet[MonomialPrime]
    s_max: int
    certified: bool = False


@dataclass(frozen=True)
class PowerSpiComparison:
    """Observed strong persistence indices of ``I`` and ``I^k``.

    ``within_bound`` checks ``spi(I^k) < spi(I)/k + 1`` and ``not_larger``
    checks ``spi(I^k) ≤ spi(I)``, both on observed values.
    """

    k: int
    base: SpiReport
    power: SpiReport

    @property
    def within_bound(self) -> bool:
        return self.power.observed_spi < self.base.observed_spi / self.k + 1

    @property
    def not_larger(self) -> bool:
        return self.power.observed_spi <= self.base.observed_spi


# -----------------------------------------------------------------------------
# scans

def _require_proper(I: MonomialIdeal) -> None:
    if I.is_zero or I.is_unit:
        raise DegenerateIdealError("colon-power scans need a nonzero proper ideal")


def _colon_step_holds(I: MonomialIdeal, ell: int, cache: PowerCache) -> bool:
    # I^ℓ ⊆ (I^{ℓ+1} : I) always, so equality is the reverse containment
    return contains(power(I, ell, cache), colon(power(I, ell + 1, cache), I))


def colon_pattern(I: MonomialIdeal, horizon: int = DEFAULT_HORIZON,
                  cache: Optional[PowerCache] = None,
                  workers: Optional[int] = None) -> ColonPattern:
    """Compute ``d_ℓ = [(I^{ℓ+1} : I) = I^ℓ]`` for ``ℓ = 1..horizon-1``.

    Powers are filled into ``cache`` up front; the colon checks are
    independent and run on a thread pool of ``workers`` threads. The result
    does not depend on the schedule.

    Parameters
    ----------
    I : MonomialIdeal
        A nonzero proper ideal.
    horizon : int, optional
        ``L ≥ 2``, by default 6.
    cache : PowerCache, optional
        Power memo; the process-wide default when None.
    workers : int, optional
        Thread count; all available cores when None.

    Returns
    -------
    ColonPattern

    Examples
    --------
    >>> from monideal.base import Ring, MonomialIdeal
    >>> ring = Ring(("x", "y"))
    >>> J = MonomialIdeal.from_exponents(ring, [[7, 0], [0, 7], [2, 5], [5, 2]])
    >>> colon_pattern(J, 5).labels()
    ['neq', 'eq', 'neq', 'eq']
    """
    _require_proper(I)
    if horizon < 2:
        raise MonomialIdealError(f"horizon must be at least 2, got {horizon}")
    cache = cache if cache is not None else default_power_cache()
    power(I, horizon, cache)
    workers = workers or os.cpu_count() or 1
    ells = range(1, horizon)
    if workers == 1:
        entries = [_colon_step_holds(I, ell, cache) for ell in ells]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(lambda ell: _colon_step_holds(I, ell, cache), ells))
    logger.info("colon pattern of %s up to L=%d: %s", I.fingerprint[:12], horizon,
                "".join("=" if e else "x" for e in entries))
    return ColonPattern(I.fingerprint, horizon, tuple(entries))


def observed_spi(pattern: ColonPattern) -> SpiReport:
    """Derive the observed strong persistence index from a pattern.

    Examples
    --------
    >>> observed_spi(ColonPattern("demo", 5, (True, False, False, True))).observed_spi
    4
    >>> observed_spi(ColonPattern("demo", 4, (True, True, True))).strong_persistence
    True
    """
    failures = [ell for ell in range(1, pattern.horizon) if not pattern[ell]]
    spi = 1 + max(failures) if failures else 1
    trailing = 0
    for entry in reversed(pattern.entries):
        if not entry:
            break
        trailing += 1
    return SpiReport(pattern, spi, trailing)


def _first_triple(pattern: ColonPattern, first: bool) -> Optional[Triple]:
    holds = pattern.colon_holds
    L = pattern.horizon
    for a in range(1, L + 1):
        if holds(a) != first:
            continue
        for b in range(a + 1, L + 1):
            if holds(b) == first:
                continue
            for c in range(b + 1, L + 1):
                if holds(c) == first:
                    return (a, b, c)
    return None


def detect_fluctuation(pattern: ColonPattern) -> FluctuationVerdict:
    """Find lexicographically minimal fluctuation witnesses in ``pattern``.

    ``a = 1`` is admitted for case (i) since ``(I^1 : I) = I^0`` always holds.

    Examples
    --------
    >>> v = detect_fluctuation(ColonPattern("demo", 5, (False, True, False, True)))
    >>> v.case_i, v.case_ii, v.verdict.value
    ((1, 2, 3), (2, 3, 4), 'both')
    """
    return FluctuationVerdict(pattern, _first_triple(pattern, True), _first_triple(pattern, False))


def ass_powers(I: MonomialIdeal, s_max: int,
               cache: Optional[PowerCache] = None) -> List[Tuple[int, FrozenSet[MonomialPrime]]]:
    """Return ``[(s, Ass(R/I^s)) for s = 1..s_max]``."""
    _require_proper(I)
    if s_max < 1:
        raise MonomialIdealError(f"s_max must be positive, got {s_max}")
    return [(s, associated_primes(power(I, s, cache))) for s in range(1, s_max + 1)]


def ass_stability(I: MonomialIdeal, s_max: int,
                  cache: Optional[PowerCache] = None) -> AssStability:
    """Observed index of stability and stable set of ``Ass(R/I^s)`` up to ``s_max``."""
    scan = ass_powers(I, s_max, cache)
    stable = scan[-1][1]
    index = s_max
    for s, primes in reversed(scan):
        if primes != stable:
            break
        index = s
    return AssStability(index, stable, s_max)


def general_colon_power(I: MonomialIdeal, r: int, s: int,
                        cache: Optional[PowerCache] = None) -> MonomialIdeal:
    """Return ``(I^r : I^s)`` for ``r, s ≥ 1``."""
    if r < 1 or s < 1:
        raise MonomialIdealError(f"exponents must be positive, got r={r}, s={s}")
    return colon(power(I, r, cache), power(I, s, cache))


def power_spi_bound(I: MonomialIdeal, k: int, horizon: int,
                    power_horizon: Optional[int] = None,
                    cache: Optional[PowerCache] = None) -> PowerSpiComparison:
    """Compare observed strong persistence indices of ``I`` and ``I^k``.

    ``I`` is scanned up to ``horizon`` and ``I^k`` up to ``power_horizon``
    (by default ``⌈horizon / k⌉ + 1``).
    """
    if k < 1:
        raise MonomialIdealError(f"k must be positive, got {k}")
    power_horizon = power_horizon or math.ceil(horizon / k) + 1
    base = observed_spi(colon_pattern(I, horizon, cache))
    powered = observed_spi(colon_pattern(power(I, k, cache), power_horizon, cache))
    return PowerSpiComparison(k, base, powered)


# -----------------------------------------------------------------------------
# parametric families and their witnesses

FAMILY_RING = Ring(("x", "y", "z"))


def family_lmr(m: int, r: int) -> MonomialIdeal:
    """Return ``(x^{m+3}, y^{m+3}, x^{m+2}y, xy^{m+2}, x^{m+1}y^2z^r)`` over ``x, y, z``.

    Examples
    --------
    >>> str(family_lmr(1, 1))
    'y^4, x*y^3, x^3*y, x^4, x^2*y^2*z'
    """
    if m < 1 or r < 1:
        raise MonomialIdealError(f"family parameters must be positive, got m={m}, r={r}")
    return MonomialIdeal.from_exponents(FAMILY_RING, [
        [m + 3, 0, 0],
        [0, m + 3, 0],
        [m + 2, 1, 0],
        [1, m + 2, 0],
        [m + 1, 2, r],
    ])


def spi_witness(m: int, s: int) -> Monomial:
    """``u = x^{m+1} y^{(s-1)(m+1)+s-2}``, the witness of ``(L^s : L) ≠ L^{s-1}``."""
    return Monomial(FAMILY_RING, (m + 1, (s - 1) * (m + 1) + s - 2, 0))


def spi_witness_check(m: int, s: int, r: int = 1,
                      cache: Optional[PowerCache] = None) -> bool:
    """True iff ``u ∈ (L^s : L)`` and ``u ∉ L^{s-1}`` for ``L = family_lmr(m, r)``.

    Examples
    --------
    >>> spi_witness_check(2, 2)
    True
    """
    if not 2 <= s <= m + 1:
        raise MonomialIdealError(f"witness needs 2 <= s <= m+1, got m={m}, s={s}")
    L = family_lmr(m, r)
    u = spi_witness(m, s)
    return is_member(u, colon(power(L, s, cache), L)) and not is_member(u, power(L, s - 1, cache))


def family_ass_witness(m: int, r: int, s: int) -> Monomial:
    """``h = x^{m+1} y^{s(m+2)-1} z^{r-1}``, the witness of ``(x, y, z) ∈ Ass(L^s)``."""
    return Monomial(FAMILY_RING, (m + 1, s * (m + 2) - 1, r - 1))


def ass_witness_check(m: int, r: int, s: int,
                      cache: Optional[PowerCache] = None) -> bool:
    """True iff ``h ∉ L^s`` and ``(L^s : h) = (x, y, z)``, for ``1 ≤ s ≤ m``."""
    if not 1 <= s <= m:
        raise MonomialIdealError(f"witness needs 1 <= s <= m, got m={m}, s={s}")
    Ls = power(family_lmr(m, r), s, cache)
    h = family_ass_witness(m, r, s)
    maximal = MonomialPrime(FAMILY_RING, (0, 1, 2)).to_ideal()
    return not is_member(h, Ls) and equals(colon_by_monomial(Ls, h), maximal)


def spi_family(m: int, r: int, expansion: Tuple[int, int, int],
               weights: Tuple[int, ...]) -> MonomialIdeal:
    """``(L_{m,r}*)_W``: an ideal in ``sum(expansion)`` variables with strong persistence index ``m + 1``."""
    spec = ExpansionSpec(FAMILY_RING, expansion)
    return lift(family_lmr(m, r), spec, WeightSpec(weights))


FLUCTUATION_RING = Ring(("x", "y"))


def fluctuation_seed() -> MonomialIdeal:
    """``J = (x^7, y^7, x^2y^5, x^5y^2)``, whose colon powers fluctuate both ways."""
    return MonomialIdeal.from_exponents(FLUCTUATION_RING, [[7, 0], [0, 7], [2, 5], [5, 2]])


def fluctuation_family(expansion: Tuple[int, int], weights: Tuple[int, ...]) -> MonomialIdeal:
    """``(J*)_W`` for the fluctuation seed ``J``; fluctuates exactly like ``J``."""
    spec = ExpansionSpec(FLUCTUATION_RING, expansion)
    return lift(fluctuation_seed(), spec, WeightSpec(weights))


# -----------------------------------------------------------------------------
# full family report

@dataclass(frozen=True)
class FamilyReport:
    """Everything the CLI reports for ``family --analyze``."""

    m: int
    r: int
    ideal: MonomialIdeal
    spi: SpiReport
    fluctuation: FluctuationVerdict
    ass: List[Tuple[int, FrozenSet[MonomialPrime]]]


def analyze_family(m: int, r: int, horizon: Optional[int] = None,
                   cache: Optional[PowerCache] = None,
                   workers: Optional[int] = None) -> FamilyReport:
    """Scan ``L_{m,r}`` up to ``horizon`` (default ``m + 3``) and its Ass up to ``m + 2``."""
    ideal = family_lmr(m, r)
    pattern = colon_pattern(ideal, horizon or m + 3, cache, workers)
    return FamilyReport(m, r, ideal, observed_spi(pattern), detect_fluctuation(pattern),
                        ass_powers(ideal, m + 2, cache))
