from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverlimits.exact import (
    LaurentPoly,
    NotDivisible,
    PoleAtOne,
    RationalFunction,
    gen_binomial,
    limit_at_one,
    pochhammer_qq,
    qbinomial,
    rational_from_str,
    rational_to_str,
)

T = sympy.Symbol("t")


def P(d):
    return LaurentPoly(d)


def to_sympy(p: LaurentPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * T**e for e, c in ((e, Fraction(c)) for e, c in p.items()))


small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))
laurent = st.dictionaries(st.integers(-6, 6), small_rationals, max_size=6).map(LaurentPoly)


def test_pochhammer_small():
    assert pochhammer_qq(0) == LaurentPoly.constant(1)
    assert pochhammer_qq(1) == P({0: 1, 2: -1})
    assert pochhammer_qq(2) == P({0: 1, 2: -1, 4: -1, 6: 1})


@given(st.integers(0, 12))
def test_pochhammer_recurrence(d):
    assert pochhammer_qq(d + 1) == pochhammer_qq(d) * P({0: 1, 2 * (d + 1): -1})


def test_qbinomial_matches_binomial_at_one():
    for n in range(8):
        for k in range(n + 1):
            assert qbinomial(n, k).at_one() == comb(n, k)


def test_limit_examples():
    assert limit_at_one(RationalFunction(P({0: 1, 2: -1}), P({0: 1, 4: -1}))) == Fraction(1, 2)
    assert limit_at_one(RationalFunction(7)) == 7
    sq = P({0: 1, 2: -1}) ** 2
    assert limit_at_one(RationalFunction(sq, P({0: 1, 2: -1}))) == 0


def test_limit_pole():
    with pytest.raises(PoleAtOne):
        limit_at_one(RationalFunction(P({0: 1, 2: -1}), pochhammer_qq(2)))


def _with_root_order(poly, k):
    return poly * P({0: -1, 1: 1}) ** k


nonvanishing = laurent.map(lambda p: p if p.at_one() != 0 else p + 1)


@settings(max_examples=30, deadline=None)
@given(nonvanishing, nonvanishing, st.integers(0, 3), st.integers(0, 3))
def test_limit_against_sympy(a, b, ka, kb):
    num = _with_root_order(a, ka + kb)
    den = _with_root_order(b, kb)
    expected = sympy.limit(to_sympy(num) / to_sympy(den), T, 1)
    assert limit_at_one(RationalFunction(num, den)) == Fraction(int(expected.p), int(expected.q))


@settings(max_examples=40, deadline=None)
@given(nonvanishing, nonvanishing, nonvanishing, nonvanishing, st.integers(0, 2), st.integers(0, 2))
def test_limit_multiplicative(p, q, r, s, k1, k2):
    f = RationalFunction(_with_root_order(p, k1), _with_root_order(q, k1))
    g = RationalFunction(_with_root_order(r, k2 + 1), _with_root_order(s, k2))
    assert limit_at_one(f * g) == limit_at_one(f) * limit_at_one(g)


def test_gen_binomial_examples():
    assert gen_binomial(-3, 2) == 6
    assert gen_binomial(5, 2) == 10
    assert gen_binomial(LaurentPoly.monomial(1), 0) == LaurentPoly.constant(1)
    assert gen_binomial(Fraction(1, 2), 2) == Fraction(-1, 8)


def test_gen_binomial_matches_comb():
    for n in range(13):
        for k in range(n + 1):
            assert gen_binomial(n, k) == comb(n, k)


def test_gen_binomial_polynomial_top():
    t = LaurentPoly.monomial(1)
    expected = P({2: Fraction(1, 2), 1: Fraction(-1, 2)})
    assert gen_binomial(t, 2) == expected
    for value in range(-4, 6):
        assert gen_binomial(t, 3)(value) == gen_binomial(value, 3)


@given(st.fractions())
def test_rational_string_roundtrip(x):
    s = rational_to_str(x)
    assert "/" in s
    assert rational_from_str(s) == x


def test_rational_string_form():
    assert rational_to_str(Fraction(-3, 7)) == "-3/7"
    assert rational_to_str(5) == "5/1"


@given(laurent, laurent)
def test_multiplication_against_naive(a, b):
    naive = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            naive[e1 + e2] = naive.get(e1 + e2, 0) + c1 * c2
    assert a * b == LaurentPoly(naive)


def test_multiplication_large_coefficients():
    a = P({0: 3**60, 1: -(2**70), 5: 1})
    b = P({-2: 7**40, 0: 1})
    naive = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            naive[e1 + e2] = naive.get(e1 + e2, 0) + c1 * c2
    assert a * b == LaurentPoly(naive)


@given(laurent, nonvanishing)
def test_exact_division_roundtrip(a, b):
    assert (a * b).exact_div(b) == a


def test_exact_division_remainder():
    with pytest.raises(NotDivisible):
        P({0: 1, 2: 1}).exact_div(P({0: 1, 1: -1}))


@given(laurent, laurent)
def test_ring_axioms(a, b):
    assert a + b == b + a
    assert (a - b) + b == a
    assert a * (b + 1) == a * b + a


def test_json_form():
    p = P({-1: Fraction(1, 2), 3: -2})
    assert p.to_json() == [[-1, "1/2"], [3, "-2/1"]]
    assert LaurentPoly.from_json(p.to_json()) == p


def test_zero_polynomial():
    z = LaurentPoly()
    assert z.is_zero()
    assert P({1: 1, 2: 0}) - P({1: 1}) == z
    assert str(z) == "0"


def test_rational_function_equality_is_cross_multiplication():
    a = RationalFunction(P({0: 1, 2: -1}), P({0: 1, 4: -1}))
    b = RationalFunction(1, P({0: 1, 2: 1}))
    assert a == b
