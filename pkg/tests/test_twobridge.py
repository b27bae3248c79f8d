import math

import pytest
from hypothesis import given, strategies as st

from corkcheck import alexander as alx
from corkcheck import twobridge as tb
from corkcheck.laurent import unit_normalize
from oracles import cf_fraction, closed_form_oracle, dict_normal, minkus_alexander, schubert_equivalent


@st.composite
def fractions(draw, max_p=199):
    p = draw(st.integers(1, max_p).map(lambda x: 2 * x + 1))
    q = draw(st.integers(1, p - 1).filter(lambda q: math.gcd(p, q) == 1))
    return tb.TwoBridgeFraction(p, q)


def test_fraction_validation():
    with pytest.raises(tb.InvalidFraction):
        tb.TwoBridgeFraction(4, 1)
    with pytest.raises(tb.InvalidFraction):
        tb.TwoBridgeFraction(9, 3)
    with pytest.raises(tb.InvalidFraction):
        tb.TwoBridgeFraction(1, 1)
    with pytest.raises(tb.InvalidFraction):
        tb.TwoBridgeFraction.parse("7")
    with pytest.raises(tb.InvalidFraction):
        tb.TwoBridgeFraction.of(6, 1)
    assert tb.TwoBridgeFraction.of(-5, 2) == tb.TwoBridgeFraction(5, 3)
    assert tb.TwoBridgeFraction.parse("7/-2") == tb.TwoBridgeFraction(7, 5)
    assert str(tb.TwoBridgeFraction(5, 2)) == "5/2"


def test_cf_validation():
    with pytest.raises(tb.InvalidContinuedFraction):
        tb.EvenContinuedFraction((2,))
    with pytest.raises(tb.InvalidContinuedFraction):
        tb.EvenContinuedFraction((2, 3))
    with pytest.raises(tb.InvalidContinuedFraction):
        tb.EvenContinuedFraction((0, 2))
    with pytest.raises(tb.InvalidContinuedFraction):
        tb.EvenContinuedFraction.parse("[2,x]")
    cf = tb.EvenContinuedFraction.parse("[2, -2, 4, 4]")
    assert cf.entries == (2, -2, 4, 4) and cf.genus == 2
    assert str(cf) == "[2,-2,4,4]"
    assert tb.EvenContinuedFraction.parse("[]").genus == 0


def test_cf_anchor_values():
    assert tb.fraction_from_cf(tb.EvenContinuedFraction((2, -2))) == tb.TwoBridgeFraction(3, 2)
    assert tb.fraction_from_cf(tb.EvenContinuedFraction((2, 2))) == tb.TwoBridgeFraction(5, 2)
    assert tb.fraction_from_cf(tb.EvenContinuedFraction(())).is_unknot()


@given(fractions())
def test_even_cf_has_the_right_value(frac):
    cf = tb.even_cf(frac)
    value = cf_fraction(cf.entries)
    assert tb.TwoBridgeFraction.of(value.numerator, value.denominator) == frac
    assert all(c % 2 == 0 and c for c in cf.entries) and len(cf) % 2 == 0
    assert tb.fraction_from_cf(cf) == frac


@given(fractions(max_p=40))
def test_seifert_route_matches_minkus(frac):
    poly = alx.alex_of_cf(tb.even_cf(frac))
    assert poly.coefficients == minkus_alexander(frac.p, frac.q)


@given(fractions(), fractions())
def test_equivalence_matches_oracle(a, b):
    for mirror in (False, True):
        assert tb.equivalent(a, b, up_to_mirror=mirror) == schubert_equivalent(a.p, a.q, b.p, b.q, mirror)
        assert tb.equivalent(a, b, up_to_mirror=mirror) == tb.equivalent(b, a, up_to_mirror=mirror)


@given(fractions(max_p=60))
def test_inverse_and_mirror(frac):
    inv = tb.TwoBridgeFraction(frac.p, frac.inverse_q())
    assert tb.equivalent(frac, inv)
    assert frac.mirror().mirror() == frac
    assert tb.equivalent(frac, frac.mirror(), up_to_mirror=True)
    # mirrors share an Alexander polynomial
    assert alx.alex_of_cf(tb.even_cf(frac)) == alx.alex_of_cf(tb.even_cf(frac.mirror()))
    assert frac.q in tb.equivalence_class(frac)


def test_equivalence_examples():
    f = tb.TwoBridgeFraction
    assert tb.equivalent(f(5, 2), f(5, 3))  # 2 * 3 = 6 = 1 mod 5
    assert not tb.equivalent(f(7, 2), f(7, 3))
    assert tb.equivalent(f(7, 2), f(7, 3), up_to_mirror=True)
    assert not tb.equivalent(f(5, 1), f(5, 4))
    assert tb.equivalent(f(5, 1), f(5, 4), up_to_mirror=True)
    assert not tb.equivalent(f(5, 2), f(7, 2), up_to_mirror=True)


def _same_value(a, b):
    (n1, d1), (n2, d2) = tb.cf_value(a), tb.cf_value(b)
    return n1 * d2 == n2 * d1


def test_collapse_zeros():
    assert tb.collapse_zeros([2, 0, 4]) == [6]
    assert tb.collapse_zeros([2, 4, 0]) == [2]
    assert tb.collapse_zeros([-2, 2, 0, -2]) == []
    for raw in ([-2, 2, -2, 2, 0, -2], [4, 0, 2, -2], [2, 0, 2, 0, 2, 4], [-2, 2, -2, 2, 6, -2]):
        col = tb.collapse_zeros(raw)
        assert 0 not in col
        assert _same_value(col, raw)


# -- the family -----------------------------------------------------------

FAMILY_CLASSES = {
    # (m, n): every (p, q) class with Delta = Delta(m, n), mirrors merged,
    # frozen from an exhaustive search with the Minkus formula
    (0, 1): [(3, 1)],
    (0, -1): [(5, 2)],
    (0, 2): [(7, 2)],
    (1, 1): [(13, 5)],
    (1, -1): [(11, 3)],
    (2, 1): [(23, 5)],
    (2, -1): [(17, 3)],
    (3, 0): [(5, 1)],
    (2, 0): [(3, 1)],
    (4, 2): [(79, 9)],
    (0, 4): [(15, 2), (15, 4)],
    (0, -4): [(17, 2), (17, 4)],
    (1, -4): [(47, 10), (47, 15)],
}

SPORADIC = {(0, 4): [(15, 4)], (0, -4): [(17, 4)], (1, -4): [(47, 10)]}


def test_frozen_classes():
    for (m, n), classes in FAMILY_CLASSES.items():
        got = [(f.p, f.q) for f in tb.search_family_fractions(m, n)]
        assert got == classes, (m, n)
        fam = tb.family_fraction(m, n)
        assert any(tb.equivalent(fam, tb.TwoBridgeFraction(*pq), up_to_mirror=True) for pq in classes)
    with pytest.raises(tb.UnsupportedParams):
        tb.family_fraction(-2, 0)


def test_family_chirality():
    # b(p, 1) is the right-handed T(2, p)
    assert tb.family_fraction(2, 0) == tb.TwoBridgeFraction(3, 1)
    assert tb.family_fraction(0, 1) == tb.TwoBridgeFraction(3, 2)
    assert tb.family_fraction(3, 0) == tb.TwoBridgeFraction(5, 1)


def _oracle_classes(m, n):
    key = dict_normal(closed_form_oracle(m, n))
    p = abs(sum(c * (-1) ** (e % 2) for e, c in closed_form_oracle(m, n).items()))
    if p == 1:
        return [(1, 0)]
    seen, found = set(), []
    for q in range(1, p):
        if math.gcd(p, q) != 1 or q in seen:
            continue
        cls = {q, pow(q, -1, p), (-q) % p, (-pow(q, -1, p)) % p}
        seen |= cls
        if minkus_alexander(p, q) == key:
            found.append((p, min(cls)))
    return sorted(found)


@pytest.mark.parametrize("m", range(0, 4))
def test_search_matches_minkus_brute_force(m):
    for n in range(-4, 5):
        got = [(f.p, f.q) for f in tb.search_family_fractions(m, n)]
        assert got == _oracle_classes(m, n), (m, n)
        fam = tb.family_fraction(m, n)
        assert any(tb.equivalent(fam, tb.TwoBridgeFraction(*pq), up_to_mirror=True) for pq in got)


def test_sporadic_second_classes():
    for (m, n), extra_p in SPORADIC.items():
        found = tb.search_family_fractions(m, n)
        fam = tb.family_fraction(m, n)
        others = [f for f in found if not tb.equivalent(f, fam, up_to_mirror=True)]
        assert [(f.p, f.q) for f in others] == extra_p


@pytest.mark.parametrize("m,n", tb.grid(range(-1, 5), range(-4, 5)))
def test_family_cf_verifies(m, n):
    cf = tb.family_cf(m, n)
    assert alx.alex_of_cf(cf) == unit_normalize(alx.delta_closed(m, n)).poly
    if m >= 0:
        raw = tb.family_pattern(m, n)
        assert tb.TwoBridgeFraction.of(*tb.cf_value(raw)) == tb.family_fraction(m, n)
        collapsed = tb.collapse_zeros(raw)
        assert _same_value(collapsed, raw)
        if (m, n) != (0, 0):  # only there is the zero entry leading
            assert 0 not in collapsed


def test_reduction_identity():
    for n in range(-6, 7):
        assert tb.family_fraction(-1, n) == tb.family_fraction(0, n + 1)


def test_twist_knot():
    assert tb.twist_knot_cf(0).entries == ()
    assert tb.twist_knot_cf(1).entries == (2, -2)
    # figure eight
    assert tb.equivalent(tb.fraction_from_cf(tb.twist_knot_cf(-1)), tb.TwoBridgeFraction(5, 2))
    for k in range(-5, 6):
        assert tb.fraction_from_cf(tb.twist_knot_cf(k)).p == abs(4 * k - 1)


def test_twist_knots_match_m_zero_family():
    from corkcheck.laurent import doteq

    for k in range(-8, 9):
        assert doteq(alx.alex_of_cf(tb.twist_knot_cf(k)), alx.delta_closed(0, k))
    assert tb.fraction_from_cf(tb.twist_knot_cf(2)).p == 7


def test_double_twist():
    for r in range(-4, 5):
        assert tb.double_twist_cf(r, 0).entries == ()
        for s in range(-4, 5):
            cf = tb.double_twist_cf(r, s)
            assert tb.fraction_from_cf(cf).p == abs(4 * r * s + 1)
            # swapping r and s gives q q' = 4rs = -1 mod p, the mirror of the inverse
            swapped = tb.fraction_from_cf(tb.double_twist_cf(s, r))
            assert tb.equivalent(tb.fraction_from_cf(cf), swapped, up_to_mirror=True)
    assert tb.double_twist_cf(3, -1) == tb.twist_knot_cf(3)


def test_classify_anchors():
    assert str(tb.classify(3, 0)) == "TorusKnot(2,5)"
    assert str(tb.classify(2, 0)) == "TorusKnot(2,3)"
    assert str(tb.classify(-1, -1)) == "Unknot"
    assert str(tb.classify(0, 1)) == "LeftTrefoil"
    assert str(tb.classify(1, 0)) == "Unknot"
    assert str(tb.classify(0, 0)) == "Unknot"
    assert str(tb.classify(1, 1)) == "NonTorus2Bridge"
    with pytest.raises(tb.UnsupportedParams):
        tb.classify(-2, 0)


@pytest.mark.parametrize("m,n", tb.grid(range(-1, 5), range(-4, 5)))
def test_classify_agrees_with_fraction(m, n):
    assert tb.classify(m, n) == tb.classify_fraction(tb.family_fraction(m, n))
    if m == -1:
        assert tb.classify(m, n) == tb.classify(0, n + 1)


def test_torus_detection():
    assert tb.TwoBridgeFraction(7, 1).is_torus()
    assert tb.TwoBridgeFraction(7, 6).is_torus()
    assert not tb.TwoBridgeFraction(7, 2).is_torus()
