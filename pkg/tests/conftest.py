import itertools

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from monideal import Monomial, MonomialIdeal, MonomialPrime, Ring, colon_by_monomial, is_member
from monideal.cache import PowerCache
from monideal.operators import ExpansionSpec, WeightSpec

settings.register_profile("monideal", max_examples=200, deadline=None)
settings.load_profile("monideal")

# -----------------------------------------------------------------------------
# common test data

RINGS = [Ring(("x",)), Ring(("x", "y")), Ring(("x", "y", "z"))]

rings = st.sampled_from(RINGS)


@st.composite
def ideals(draw, ring=None, max_generators=4, max_exponent=4, proper=False):
    """Nonzero ideals with at most ``max_generators`` generators."""
    ring = ring if ring is not None else draw(rings)
    row = st.lists(st.integers(0, max_exponent), min_size=ring.n, max_size=ring.n)
    rows = draw(st.lists(row, min_size=1, max_size=max_generators))
    if proper:
        rows = [r if any(r) else [1] + r[1:] for r in rows]
    return MonomialIdeal.from_exponents(ring, rows)


@st.composite
def ideal_pairs(draw, **kwargs):
    ring = draw(rings)
    return draw(ideals(ring, **kwargs)), draw(ideals(ring, **kwargs))


@st.composite
def primes(draw, ring):
    indices = draw(st.sets(st.integers(0, ring.n - 1), min_size=1))
    return MonomialPrime(ring, tuple(indices))


@st.composite
def expansions(draw, ring, max_count=2):
    counts = draw(st.lists(st.integers(1, max_count), min_size=ring.n, max_size=ring.n))
    return ExpansionSpec(ring, tuple(counts))


@st.composite
def weightings(draw, n, max_weight=4):
    return WeightSpec(tuple(draw(st.lists(st.integers(1, max_weight), min_size=n, max_size=n))))


# -----------------------------------------------------------------------------
# brute-force oracles over exponent boxes

def box(ring, bound):
    """Every monomial with all exponents in ``[0, bound]``."""
    for exponents in itertools.product(range(bound + 1), repeat=ring.n):
        yield Monomial(ring, exponents)


def max_exponent(*ideals_):
    return max([int(I.matrix.max()) for I in ideals_ if not I.is_zero] + [0])


def oracle_colon(I, J):
    # generators of (I : J) divide some generator of I
    ring = I.ring
    found = [u for u in box(ring, max_exponent(I))
             if all(is_member(u * v, I) for v in J.generators)]
    return MonomialIdeal(ring, tuple(found))


def oracle_intersect(I, J):
    ring = I.ring
    found = [u for u in box(ring, max_exponent(I, J)) if is_member(u, I) and is_member(u, J)]
    return MonomialIdeal(ring, tuple(found))


def oracle_ass(I):
    primes_ = set()
    for u in box(I.ring, max_exponent(I)):
        p = MonomialPrime.from_ideal(colon_by_monomial(I, u))
        if p is not None:
            primes_.add(p)
    return frozenset(primes_)


@pytest.fixture
def cache():
    return PowerCache()
