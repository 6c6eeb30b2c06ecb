import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monideal import (
    ColonPattern,
    MonomialIdeal,
    MonomialPrime,
    ass_powers,
    ass_stability,
    colon,
    colon_pattern,
    detect_fluctuation,
    equals,
    expand,
    family_lmr,
    general_colon_power,
    observed_spi,
    power,
    power_spi_bound,
    product,
    spi_witness_check,
    weight,
)
from monideal.cache import PowerCache
from monideal.corpus import FAMILY_GRID, PATTERN_CASES
from monideal.errors import DegenerateIdealError, MonomialIdealError
from monideal.persistence import (
    FAMILY_RING,
    FluctuationKind,
    analyze_family,
    ass_witness_check,
    fluctuation_family,
    fluctuation_seed,
    spi_family,
    spi_witness,
)
from tests.conftest import expansions, ideals, weightings

# -----------------------------------------------------------------------------
# common test data

XY_PRIME = MonomialPrime(FAMILY_RING, (0, 1))
MAXIMAL = MonomialPrime(FAMILY_RING, (0, 1, 2))


def pattern_of(*labels):
    return ColonPattern("hand", len(labels) + 1, tuple(label == "eq" for label in labels))


def naive_power(I, s):
    out = I.ring.unit_ideal()
    for _ in range(s):
        out = product(out, I)
    return out


@st.composite
def small_lifts(draw):
    I = draw(ideals(max_generators=3, max_exponent=3, proper=True))
    spec = draw(expansions(I.ring))
    weights = draw(weightings(spec.target.n, max_weight=3))
    return I, spec, weights


# -----------------------------------------------------------------------------
# colon patterns of the corpus

@pytest.mark.parametrize("case", PATTERN_CASES, ids=lambda c: c.name)
def test_corpus_patterns(case, cache):
    pattern = colon_pattern(case.parse(), case.horizon, cache)
    assert tuple(pattern.labels()) == case.entries
    report = observed_spi(pattern)
    assert report.observed_spi == case.observed_spi
    assert not report.certified
    verdict = detect_fluctuation(pattern)
    assert (verdict.case_i, verdict.case_ii) == (case.case_i, case.case_ii)


@pytest.mark.parametrize("m, r", FAMILY_GRID)
def test_family_spi(m, r, cache):
    pattern = colon_pattern(family_lmr(m, r), m + 3, cache)
    assert [ell for ell in range(1, m + 3) if not pattern[ell]] == list(range(1, m + 1))
    report = observed_spi(pattern)
    assert report.observed_spi == m + 1
    assert report.trailing_equal_run == 2


def test_family_validation():
    assert str(family_lmr(1, 1)) == "y^4, x*y^3, x^3*y, x^4, x^2*y^2*z"
    for m, r in [(0, 1), (1, 0), (-2, 3)]:
        with pytest.raises(MonomialIdealError):
            family_lmr(m, r)


# -----------------------------------------------------------------------------
# witnesses

def test_spi_witness_monomials():
    assert spi_witness(2, 2).exponents == (3, 3, 0)
    assert spi_witness(3, 4).exponents == (4, 14, 0)


@pytest.mark.parametrize("m, r", FAMILY_GRID)
def test_spi_witnesses_hold(m, r, cache):
    for s in range(2, m + 2):
        assert spi_witness_check(m, s, r, cache)


@pytest.mark.parametrize("m, r", FAMILY_GRID)
def test_ass_witnesses_hold(m, r, cache):
    for s in range(1, m + 1):
        assert ass_witness_check(m, r, s, cache)


def test_witness_ranges():
    with pytest.raises(MonomialIdealError):
        spi_witness_check(1, 3)
    with pytest.raises(MonomialIdealError):
        spi_witness_check(2, 1)
    with pytest.raises(MonomialIdealError):
        ass_witness_check(1, 1, 2)


# -----------------------------------------------------------------------------
# associated primes of powers

@pytest.mark.parametrize("m, r", [(1, 1), (2, 1), (1, 2)])
def test_family_ass_powers(m, r, cache):
    scan = ass_powers(family_lmr(m, r), m + 2, cache)
    assert [s for s, _ in scan] == list(range(1, m + 3))
    for s, primes in scan:
        assert primes == ({XY_PRIME, MAXIMAL} if s <= m else {XY_PRIME})


def test_family_ass_stability(cache):
    stability = ass_stability(family_lmr(2, 1), 4, cache)
    assert stability.index == 3
    assert stability.stable_set == {XY_PRIME}
    assert not stability.certified


def test_general_colon_power(cache):
    L = family_lmr(1, 1)
    assert general_colon_power(L, 3, 3, cache).is_unit
    for r, s in [(4, 2), (5, 3), (5, 2)]:
        assert equals(general_colon_power(L, r, s, cache), naive_power(L, r - s))
    with pytest.raises(MonomialIdealError):
        general_colon_power(L, 0, 1)


@pytest.mark.parametrize("m, r", FAMILY_GRID)
def test_family_colon_powers(m, r, cache):
    L = family_lmr(m, r)
    assert general_colon_power(L, m + 4, m + 4, cache).is_unit
    for s in range(1, 4):
        for top in range(s + m + 1, m + 5):
            assert equals(general_colon_power(L, top, s, cache), power(L, top - s, cache))


def test_power_spi_bound(cache):
    comparison = power_spi_bound(family_lmr(1, 1), 2, 4, cache=cache)
    assert comparison.base.observed_spi == 2
    assert comparison.power.horizon == 3
    assert comparison.not_larger
    assert comparison.within_bound
    with pytest.raises(MonomialIdealError):
        power_spi_bound(family_lmr(1, 1), 0, 4)


@pytest.mark.parametrize("m, r", FAMILY_GRID)
def test_family_power_spi_bound(m, r, cache):
    comparison = power_spi_bound(family_lmr(m, r), 2, m + 3, cache=cache)
    assert comparison.base.observed_spi == m + 1
    assert comparison.power.observed_spi <= (m + 2) // 2
    assert comparison.not_larger
    assert comparison.within_bound


# -----------------------------------------------------------------------------
# patterns built by hand

def test_mixed_pattern():
    pattern = pattern_of("eq", "neq", "eq", "neq", "eq")
    report = observed_spi(pattern)
    assert (report.observed_spi, report.trailing_equal_run) == (5, 1)
    verdict = detect_fluctuation(pattern)
    assert (verdict.case_i, verdict.case_ii) == ((1, 3, 4), (3, 4, 5))
    assert verdict.verdict is FluctuationKind.BOTH


def test_all_unequal_pattern():
    pattern = pattern_of("neq", "neq", "neq")
    report = observed_spi(pattern)
    assert (report.observed_spi, report.trailing_equal_run) == (4, 0)
    verdict = detect_fluctuation(pattern)
    assert verdict.verdict is FluctuationKind.NONE
    assert not verdict.fluctuates


def test_all_equal_pattern():
    pattern = pattern_of("eq", "eq", "eq", "eq")
    report = observed_spi(pattern)
    assert report.strong_persistence
    assert report.trailing_equal_run == 4
    assert detect_fluctuation(pattern).verdict is FluctuationKind.NONE


def test_single_entry_pattern():
    pattern = pattern_of("neq")
    assert observed_spi(pattern).observed_spi == 2
    assert not detect_fluctuation(pattern).fluctuates


def test_invalid_patterns():
    with pytest.raises(MonomialIdealError):
        ColonPattern("bad", 1, ())
    with pytest.raises(MonomialIdealError):
        ColonPattern("bad", 4, (True, False))
    pattern = pattern_of("eq", "neq")
    with pytest.raises(IndexError):
        pattern[0]
    with pytest.raises(IndexError):
        pattern[3]


# -----------------------------------------------------------------------------
# scans

def test_degenerate_scans():
    ring = FAMILY_RING
    for I in [ring.zero_ideal(), ring.unit_ideal()]:
        with pytest.raises(DegenerateIdealError):
            colon_pattern(I, 4)
        with pytest.raises(DegenerateIdealError):
            ass_powers(I, 2)
    with pytest.raises(MonomialIdealError):
        colon_pattern(family_lmr(1, 1), 1)
    with pytest.raises(MonomialIdealError):
        ass_powers(family_lmr(1, 1), 0)


def test_pattern_independent_of_cache_and_workers(tmp_path):
    I = fluctuation_seed()
    fresh = colon_pattern(I, 5, PowerCache(), workers=1)
    assert colon_pattern(I, 5, PowerCache(), workers=4) == fresh
    on_disk = PowerCache(tmp_path)
    assert colon_pattern(I, 5, on_disk, workers=2) == fresh
    assert any(tmp_path.iterdir())
    assert colon_pattern(I, 5, PowerCache(tmp_path), workers=2) == fresh


def test_corrupt_cache_entries_are_ignored(tmp_path):
    I = fluctuation_seed()
    fresh = colon_pattern(I, 4, PowerCache(), workers=1)
    entries = tmp_path / I.fingerprint
    entries.mkdir(parents=True)
    (entries / "2.json").write_bytes(b"\xff\xfe not utf8")
    (entries / "3.json").write_text("{\"format\": 1, \"kind\": ", encoding="utf-8")
    assert colon_pattern(I, 4, PowerCache(tmp_path), workers=1) == fresh
    assert colon_pattern(I, 4, PowerCache(tmp_path), workers=2) == fresh


@given(ideals(max_generators=3, max_exponent=3, proper=True))
@settings(max_examples=50)
def test_pattern_matches_naive_powers(I):
    pattern = colon_pattern(I, 4, PowerCache(), workers=1)
    for ell in range(1, 4):
        assert pattern[ell] == equals(colon(naive_power(I, ell + 1), I), naive_power(I, ell))


@given(ideals(max_generators=3, max_exponent=3, proper=True))
@settings(max_examples=50)
def test_colon_powers_past_observed_spi(I):
    cache = PowerCache()
    spi = observed_spi(colon_pattern(I, 4, cache, workers=1)).observed_spi
    for r in range(2, 5):
        for s in range(1, r - spi + 1):
            assert equals(general_colon_power(I, r, s, cache), naive_power(I, r - s))


@given(ideals(max_generators=3, max_exponent=3, proper=True), st.sampled_from([2, 3]))
@settings(max_examples=30)
def test_power_spi_bound_on_small_ideals(I, k):
    comparison = power_spi_bound(I, k, 6, power_horizon=6 // k, cache=PowerCache())
    assert comparison.power.horizon == 6 // k
    assert comparison.not_larger
    assert comparison.within_bound


@given(small_lifts())
@settings(max_examples=50)
def test_pattern_transfers_along_lifts(instance):
    I, spec, weights = instance
    cache = PowerCache()
    entries = colon_pattern(I, 4, cache, workers=1).entries
    expanded = expand(I, spec)
    assert colon_pattern(expanded, 4, cache, workers=1).entries == entries
    assert colon_pattern(weight(expanded, weights), 4, cache, workers=1).entries == entries


# -----------------------------------------------------------------------------
# lifted families

def test_spi_family(cache):
    L = spi_family(1, 1, (1, 1, 2), (1, 1, 1, 2))
    assert L.ring.n == 4
    assert observed_spi(colon_pattern(L, 4, cache)).observed_spi == 2
    with pytest.raises(MonomialIdealError):
        spi_family(1, 1, (1, 1, 2), (1, 1, 1))


def test_fluctuation_family(cache):
    seed = colon_pattern(fluctuation_seed(), 5, cache)
    lifted = colon_pattern(fluctuation_family((1, 1), (2, 3)), 5, cache)
    assert lifted.entries == seed.entries
    assert detect_fluctuation(lifted).verdict is FluctuationKind.BOTH


def test_analyze_family(cache):
    report = analyze_family(1, 1, cache=cache)
    assert report.ideal == family_lmr(1, 1)
    assert report.spi.horizon == 4
    assert report.spi.observed_spi == 2
    assert report.fluctuation.case_i == (1, 2, 3)
    assert report.fluctuation.case_ii is None
    assert [primes for _, primes in report.ass] == [{XY_PRIME, MAXIMAL}, {XY_PRIME}, {XY_PRIME}]


def test_unused_variable_does_not_change_pattern(cache):
    # adding z to the seed's ring leaves every colon unchanged
    seed = fluctuation_seed()
    rows = [list(row) + [0] for row in seed.matrix.tolist()]
    padded = MonomialIdeal.from_exponents(FAMILY_RING, rows)
    assert colon_pattern(padded, 5, cache).entries == colon_pattern(seed, 5, cache).entries
