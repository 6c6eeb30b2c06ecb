import pytest
from hypothesis import given

from monideal import (
    MAX_EXPONENT,
    Monomial,
    MonomialIdeal,
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
from monideal.cache import PowerCache
from monideal.errors import (
    ExponentOverflowError,
    MonomialIdealError,
    NotDivisibleError,
    RingMismatchError,
    ZeroIdealError,
)
from tests.conftest import ideal_pairs, ideals, oracle_colon, oracle_intersect

# -----------------------------------------------------------------------------
# common test data

XY = Ring(("x", "y"))
XYZ = Ring(("x", "y", "z"))


def ideal(ring, *rows):
    return MonomialIdeal.from_exponents(ring, rows)


# -----------------------------------------------------------------------------
# tests

@pytest.mark.parametrize("variables", [(), ("x", "x"), ("1x",), ("x-y",), ("",)])
def test_invalid_rings(variables):
    with pytest.raises(MonomialIdealError):
        Ring(variables)


def test_ring_lookup():
    assert XYZ.index("z") == 2
    with pytest.raises(MonomialIdealError):
        XYZ.index("w")


def test_monomial_validation():
    with pytest.raises(MonomialIdealError):
        Monomial(XY, (1,))
    with pytest.raises(MonomialIdealError):
        Monomial(XY, (1, -1))
    with pytest.raises(ExponentOverflowError):
        Monomial(XY, (MAX_EXPONENT + 1, 0))
    with pytest.raises(ExponentOverflowError):
        Monomial(XY, (MAX_EXPONENT, 0)) * Monomial(XY, (1, 0))


def test_monomial_basics():
    u = Monomial(XYZ, (2, 0, 3))
    assert u.degree == 5
    assert u.support == {0, 2}
    assert gcd(u, Monomial(XYZ, (1, 4, 5))).exponents == (1, 0, 3)
    assert lcm(u, Monomial(XYZ, (1, 4, 5))).exponents == (2, 4, 5)
    assert divide(u, Monomial(XYZ, (1, 0, 3))).exponents == (1, 0, 0)
    with pytest.raises(NotDivisibleError):
        divide(u, Monomial(XYZ, (0, 1, 0)))
    assert XYZ.one().is_unit()


def test_canonical_order_and_minimality():
    I = ideal(XY, [6, 0], [0, 6], [1, 5], [5, 1], [4, 4], [7, 3], [4, 4])
    assert [g.exponents for g in I.generators] == [(0, 6), (1, 5), (5, 1), (6, 0), (4, 4)]
    assert I == minimalize(reversed(I.generators), XY)
    assert minimalize([], XY).is_zero


def test_zero_and_unit():
    assert XY.zero_ideal().is_zero and len(XY.zero_ideal()) == 0
    assert ideal(XY, [0, 0], [3, 1]).is_unit
    assert contains(XY.unit_ideal(), ideal(XY, [1, 0]))
    assert not contains(ideal(XY, [1, 0]), XY.unit_ideal())


def test_membership_and_sugar():
    I = ideal(XY, [2, 0], [1, 1])
    J = ideal(XY, [0, 3])
    assert Monomial(XY, (3, 5)) in I
    assert Monomial(XY, (0, 9)) not in I
    assert I * J == product(I, J)
    assert I & J == intersect(I, J)
    assert I ** 3 == power(I, 3)
    assert I + J == ideal(XY, [2, 0], [1, 1], [0, 3])


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        product(ideal(XY, [1, 0]), ideal(XYZ, [1, 0, 0]))


def test_power_edge_cases():
    I = ideal(XY, [1, 0], [0, 1])
    assert power(I, 0) == XY.unit_ideal()
    assert power(I, 1) is I
    assert power(XY.zero_ideal(), 4).is_zero
    assert power(XY.unit_ideal(), 4).is_unit
    assert len(power(I, 4)) == 5
    with pytest.raises(MonomialIdealError):
        power(I, -1)


def test_product_overflow():
    big = ideal(XY, [MAX_EXPONENT, 0])
    with pytest.raises(ExponentOverflowError):
        product(big, ideal(XY, [1, 0]))


def test_colon_edge_cases():
    I = ideal(XY, [2, 1], [0, 3])
    with pytest.raises(ZeroIdealError):
        colon(I, XY.zero_ideal())
    assert colon(I, XY.unit_ideal()) == I
    assert colon(XY.zero_ideal(), I).is_zero
    assert colon(I, I).is_unit
    assert colon_by_monomial(I, Monomial(XY, (5, 0))) == ideal(XY, [0, 1])


def test_intersect_edge_cases():
    I = ideal(XY, [1, 0])
    assert intersect(I, XY.zero_ideal()).is_zero
    assert intersect(I, XY.unit_ideal()) == I
    assert intersect(I, ideal(XY, [0, 1])) == ideal(XY, [1, 1])


def test_radical_and_support():
    I = ideal(XYZ, [3, 0, 0], [0, 2, 5], [1, 1, 0])
    assert radical(I) == ideal(XYZ, [1, 0, 0], [0, 1, 1])
    assert support(I) == {0, 1, 2}
    assert support(ideal(XYZ, [2, 0, 0])) == {0}


def test_fingerprint_is_canonical():
    I = ideal(XY, [2, 0], [1, 1])
    J = ideal(XY, [1, 1], [2, 0], [3, 3])
    assert I.fingerprint == J.fingerprint
    assert I.fingerprint != ideal(XY, [2, 0]).fingerprint


@given(ideals())
def test_generators_are_minimal_and_sorted(I):
    gens = I.generators
    for a in gens:
        assert sum(a.divides(b) for b in gens) == 1
    keys = [(g.degree, g.exponents) for g in gens]
    assert keys == sorted(keys)


@given(ideal_pairs())
def test_colon_matches_box_oracle(pair):
    I, J = pair
    assert equals(colon(I, J), oracle_colon(I, J))


@given(ideal_pairs())
def test_intersect_matches_box_oracle(pair):
    I, J = pair
    assert equals(intersect(I, J), oracle_intersect(I, J))


@given(ideal_pairs())
def test_product_commutes_and_contains(pair):
    I, J = pair
    IJ = product(I, J)
    assert IJ == product(J, I)
    assert contains(intersect(I, J), IJ)


@given(ideals(max_generators=3, max_exponent=3))
def test_power_cache_independence(I):
    expected = I
    for s in range(2, 5):
        expected = product(expected, I)
        assert power(I, s, PowerCache()) == expected


@given(ideals())
def test_colon_contains_ideal(I):
    # (I^2 : I) always contains I
    assert contains(colon(product(I, I), I), I)


@given(ideals())
def test_radical_is_idempotent(I):
    assert radical(radical(I)) == radical(I)
    assert contains(radical(I), I)
