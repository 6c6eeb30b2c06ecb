import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monideal import (
    MAX_EXPONENT,
    ExpansionSpec,
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    Ring,
    WeightSpec,
    colon,
    containment_via_localization,
    contains,
    embed,
    expand,
    expand_prime,
    ideal_sum,
    intersect,
    is_member,
    lift,
    localize,
    product,
    radical,
    weight,
)
from monideal.corpus import EXPANSION_CASE, WEIGHT_CASE
from monideal.errors import ExponentOverflowError, MonomialIdealError, RingMismatchError
from monideal.operators import contract_pi, local_ring
from monideal.persistence import family_lmr
from monideal.parser import parse_ideal, parse_ring
from tests.conftest import RINGS, box, expansions, ideals, primes, weightings

# -----------------------------------------------------------------------------
# common test data

X123 = Ring(("x1", "x2", "x3"))
OPERATIONS = [ideal_sum, product, intersect, colon]


@st.composite
def expansion_instances(draw):
    ring = draw(st.sampled_from(RINGS))
    return draw(ideals(ring)), draw(ideals(ring)), draw(expansions(ring))


@st.composite
def weight_instances(draw):
    ring = draw(st.sampled_from(RINGS))
    return draw(ideals(ring)), draw(ideals(ring)), draw(weightings(ring.n))


@st.composite
def localization_instances(draw):
    ring = draw(st.sampled_from(RINGS))
    return draw(ideals(ring)), draw(ideals(ring)), draw(primes(ring))


# -----------------------------------------------------------------------------
# expansion

def test_expansion_spec():
    spec = ExpansionSpec(X123, (3, 1, 2))
    assert spec.target.variables == ("x1_1", "x1_2", "x1_3", "x2_1", "x3_1", "x3_2")
    assert list(spec.block(2)) == [4, 5]
    for counts in [(1, 1), (0, 1, 1), (1, -2, 1)]:
        with pytest.raises(MonomialIdealError):
            ExpansionSpec(X123, counts)


def test_expansion_worked_example():
    spec = ExpansionSpec(parse_ring(EXPANSION_CASE.ring), EXPANSION_CASE.parameters)
    found = expand(parse_ideal(EXPANSION_CASE.ideal, spec.source), spec)
    assert len(found) == 19
    assert found == parse_ideal(EXPANSION_CASE.expected, parse_ring(EXPANSION_CASE.target_ring))


def test_expansion_of_zero_and_wrong_ring():
    spec = ExpansionSpec(X123, (2, 2, 2))
    assert expand(X123.zero_ideal(), spec).is_zero
    assert expand(X123.unit_ideal(), spec).is_unit
    with pytest.raises(RingMismatchError):
        expand(Ring(("x",)).unit_ideal(), spec)


def test_contract_and_expand_prime():
    spec = ExpansionSpec(X123, (3, 1, 2))
    m = Monomial(spec.target, (1, 2, 0, 0, 1, 0))
    assert contract_pi(m, spec).exponents == (3, 0, 1)
    p = MonomialPrime(X123, (0, 2))
    assert expand_prime(p, spec).names == ("x1_1", "x1_2", "x1_3", "x3_1", "x3_2")


@given(expansion_instances())
def test_expansion_commutes_with_operations(instance):
    I, J, spec = instance
    for op in OPERATIONS:
        assert expand(op(I, J), spec) == op(expand(I, spec), expand(J, spec))


@given(expansion_instances())
@settings(max_examples=50)
def test_expansion_membership_and_radical(instance):
    I, _, spec = instance
    expanded = expand(I, spec)
    assert radical(expanded) == expand(radical(I), spec)
    for f in box(spec.target, 2):
        assert is_member(f, expanded) == is_member(contract_pi(f, spec), I)


@given(st.sampled_from(RINGS).flatmap(lambda ring: st.tuples(primes(ring), expansions(ring))))
def test_expanded_prime_is_expanded_ideal(instance):
    p, spec = instance
    assert expand_prime(p, spec).to_ideal() == expand(p.to_ideal(), spec)


# -----------------------------------------------------------------------------
# weighting

def test_weight_worked_example():
    ring = parse_ring(WEIGHT_CASE.ring)
    found = weight(parse_ideal(WEIGHT_CASE.ideal, ring), WeightSpec(WEIGHT_CASE.parameters))
    assert found == parse_ideal(WEIGHT_CASE.expected, ring)


def test_weight_errors():
    I = MonomialIdeal.from_exponents(X123, [[2, 0, 1]])
    with pytest.raises(MonomialIdealError):
        weight(I, WeightSpec((1, 2)))
    with pytest.raises(MonomialIdealError):
        WeightSpec((1, 0, 2))
    with pytest.raises(ExponentOverflowError):
        weight(I, WeightSpec((MAX_EXPONENT, 1, 1)))
    assert weight(X123.zero_ideal(), WeightSpec((2, 2, 2))).is_zero


@given(weight_instances())
def test_weighting_commutes_with_operations(instance):
    I, J, spec = instance
    for op in OPERATIONS:
        assert weight(op(I, J), spec) == op(weight(I, spec), weight(J, spec))


def test_lift_is_weighted_expansion():
    ring = Ring(("x", "y"))
    I = MonomialIdeal.from_exponents(ring, [[2, 0], [1, 1]])
    spec = ExpansionSpec(ring, (2, 1))
    weights = WeightSpec((1, 2, 3))
    assert lift(I, spec, weights) == weight(expand(I, spec), weights)


# -----------------------------------------------------------------------------
# monomial localization

def test_localize_example():
    ring = Ring(("x", "y", "z"))
    I = MonomialIdeal.from_exponents(ring, [[1, 0, 2], [0, 3, 1]])
    p = MonomialPrime.from_names(ring, ["x", "y"])
    local = localize(I, p)
    assert local_ring(p).variables == ("x", "y")
    assert local == MonomialIdeal.from_exponents(local_ring(p), [[1, 0], [0, 3]])
    assert embed(local, ring) == MonomialIdeal.from_exponents(ring, [[1, 0, 0], [0, 3, 0]])


@pytest.mark.parametrize("m", [1, 2])
def test_localize_family_at_xy(m):
    L = family_lmr(m, 1)
    local = localize(L, MonomialPrime.from_names(L.ring, ["x", "y"]))
    expected = [[m + 3, 0], [0, m + 3], [m + 2, 1], [1, m + 2], [m + 1, 2]]
    assert local == MonomialIdeal.from_exponents(Ring(("x", "y")), expected)
    assert len(local) == 5


def test_localize_outside_support_is_unit():
    ring = Ring(("x", "y", "z"))
    I = MonomialIdeal.from_exponents(ring, [[1, 1, 0], [0, 0, 2]])
    assert localize(I, MonomialPrime.from_names(ring, ["x", "y"])).is_unit
    assert localize(I, MonomialPrime.from_names(ring, ["z"])).is_unit
    assert localize(I, MonomialPrime.from_names(ring, ["x", "z"])) == parse_ideal("x, z^2", Ring(("x", "z")))


@given(ideals())
def test_localize_at_maximal_prime_is_identity(I):
    p = MonomialPrime(I.ring, tuple(range(I.ring.n)))
    assert local_ring(p) == I.ring
    assert localize(I, p) == I


@given(localization_instances())
def test_localization_commutes_with_operations(instance):
    I, J, p = instance
    for op in OPERATIONS:
        assert localize(op(I, J), p) == op(localize(I, p), localize(J, p))


@given(localization_instances())
def test_embedded_localization_contains_ideal(instance):
    I, _, p = instance
    assert contains(embed(localize(I, p), I.ring), I)


@given(st.sampled_from(RINGS).flatmap(lambda ring: st.tuples(ideals(ring, proper=True), ideals(ring))))
def test_containment_is_decided_locally(pair):
    I, J = pair
    assert containment_via_localization(J, I) == contains(I, J)
