import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellgenus.ratfunc import LaurentPolynomial, NotPolynomial, RationalFunction, poly_gcd, poly_mul

small = st.fractions(min_value=-3, max_value=3, max_denominator=3)
polys = st.lists(small, min_size=1, max_size=4)
nonzero_polys = polys.filter(lambda p: any(p))
ratfuncs = st.builds(RationalFunction, polys, nonzero_polys)


def lam(k=1):
    return RationalFunction.monomial(k)


def test_cancellation():
    a = RationalFunction([1], [-1, 1])
    b = RationalFunction([-1], [-1, 1])
    assert (a + b).is_zero()


def test_cp1_signature_cancels():
    # (lam+1)/(lam-1) + (1+lam)/(1-lam) = 0
    assert ((lam() + 1) / (lam() - 1) + (1 + lam()) / (1 - lam())).is_zero()


def test_gcd_reduction():
    f = RationalFunction([1], [-1, 1]) * RationalFunction([-1, 1], [1, 1])
    assert f == RationalFunction([1], [1, 1])
    assert f.num == (1,) and f.den == (1, 1)


def test_canonical_form_is_monic():
    f = RationalFunction([2, 4], [6, 2])
    assert f.den[-1] == 1
    assert f == RationalFunction([1, 2], [3, 1])


def test_to_laurent():
    assert RationalFunction([1, 0, 1], [0, 1]).to_laurent() == LaurentPolynomial({1: 1, -1: 1})
    assert RationalFunction([], [1]).to_laurent() == LaurentPolynomial({})
    with pytest.raises(NotPolynomial):
        RationalFunction([1], [1, 1]).to_laurent()


def test_laurent_round_trip():
    p = LaurentPolynomial({-3: 2, 0: F(1, 2), 4: -1})
    assert p.to_rational_function().to_laurent() == p
    assert LaurentPolynomial({2: 0, 1: 3}).terms == {1: 3}


def test_substitute_inverse():
    f = (lam() + 1) / (lam() - 1)
    assert f.substitute_inverse() == -f
    p = LaurentPolynomial({-1: 2, 3: 5})
    assert p.to_rational_function().substitute_inverse() == p.substitute_inverse().to_rational_function()


def test_evaluate_and_pole():
    f = RationalFunction([1, 1], [-1, 1])
    assert f.evaluate(3) == 2
    with pytest.raises(ZeroDivisionError):
        f.evaluate(1)


def test_gcd():
    a = poly_mul((F(-1), F(1)), (F(2), F(1)))
    b = poly_mul((F(-1), F(1)), (F(5), F(0), F(1)))
    assert poly_gcd(a, b) == (-1, 1)
    assert poly_gcd((), ()) == ()


def test_variable_mismatch():
    with pytest.raises(ValueError):
        RationalFunction([1], [1], "lam") + RationalFunction([1], [1], "mu")


@settings(max_examples=50, deadline=None)
@given(ratfuncs, ratfuncs, ratfuncs)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == 1


@settings(max_examples=30, deadline=None)
@given(st.lists(ratfuncs, min_size=2, max_size=6), st.randoms(use_true_random=False))
def test_sum_is_order_independent(fs, r):
    total = sum(fs, RationalFunction.constant(0))
    shuffled = list(fs)
    r.shuffle(shuffled)
    again = sum(shuffled, RationalFunction.constant(0))
    assert (again.num, again.den) == (total.num, total.den)
