from fractions import Fraction

import mpmath
import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from harmonic_cert.numerics import (
    DEFAULT_BUDGET,
    DomainError,
    PrecisionBudget,
    RatInterval,
    agreed_decimal,
    directed_decimal,
    iv_add,
    iv_div,
    iv_ln,
    iv_mul,
    iv_sub,
    rat,
    rat_add,
    rat_div,
    rat_mul,
    rat_sub,
    truncate_decimal,
)



def mp(x):
    x = rat(x)
    return mpmath.mpf(int(x.numerator)) / int(x.denominator)


def ln_atanh_oracle(x: Fraction, terms: int = 400) -> tuple[Fraction, Fraction]:
    """ln x for 1 <= x <= 2 from far more atanh terms than any budget uses."""
    t = (x - 1) / (x + 1)
    s = sum(t ** (2 * j + 1) / (2 * j + 1) for j in range(terms))
    tail = t ** (2 * terms + 1) / ((2 * terms + 1) * (1 - t * t))
    return 2 * s, 2 * (s + tail)


rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=10 ** 6)
positive = st.fractions(min_value=Fraction(1, 10 ** 6), max_value=10 ** 9, max_denominator=10 ** 6)


def test_rat_examples():
    assert rat_add(mpq(1, 2), mpq(1, 3)) == mpq(5, 6)
    half = rat_mul(mpq(2, 4), mpq(2, 2))
    assert (half.numerator, half.denominator) == (1, 2)
    assert rat_div(1, 3) == mpq(1, 3)
    assert rat_sub(Fraction(1, 2), 1) == mpq(-1, 2)


def test_rat_div_by_zero():
    with pytest.raises(DomainError):
        rat_div(1, 0)


def test_rat_conversions():
    assert rat(Fraction(3, 9)) == mpq(1, 3)
    assert rat(0.5) == mpq(1, 2)
    assert rat(7, 14) == mpq(1, 2)
    with pytest.raises(TypeError):
        rat("1/2")


def test_interval_examples():
    assert iv_add(RatInterval(1, 2), RatInterval(3, 4)) == RatInterval(4, 6)
    assert iv_mul(RatInterval(-1, 2), RatInterval(3, 3)) == RatInterval(-3, 6)
    assert iv_sub(RatInterval(0, 0), RatInterval(1, 1)) == RatInterval(-1, -1)
    assert iv_div(RatInterval(1, 2), RatInterval(2, 4)) == RatInterval(mpq(1, 4), 1)


def test_interval_rejects_empty_and_zero_division():
    with pytest.raises(ValueError):
        RatInterval(2, 1)
    with pytest.raises(DomainError):
        iv_div(RatInterval(1, 1), RatInterval(-1, 1))


def test_interval_abs_and_rounding():
    assert RatInterval(-3, 2).abs() == RatInterval(0, 3)
    assert RatInterval(-3, -2).abs() == RatInterval(2, 3)
    iv = RatInterval(mpq(1, 3), mpq(2, 3))
    out = iv.rounded_out(10)
    assert iv in out
    assert out.lo.denominator <= 1024 and out.hi.denominator <= 1024


@given(rationals, rationals)
def test_containment_property(a, b):
    eps = mpq(1, 1000)
    A = RatInterval(rat(a) - eps, rat(a) + eps)
    B = RatInterval(rat(b) - eps, rat(b) + eps)
    assert rat(a) + rat(b) in A + B
    assert rat(a) - rat(b) in A - B
    assert rat(a) * rat(b) in A * B
    if not (B.lo <= 0 <= B.hi):
        assert rat(a) / rat(b) in A / B


def test_ln_one_is_exact():
    for budget in (PrecisionBudget(1), DEFAULT_BUDGET, PrecisionBudget(80)):
        assert iv_ln(1, budget) == RatInterval(0, 0)


def test_ln_two_against_long_series():
    lo, hi = ln_atanh_oracle(Fraction(2))
    iv = iv_ln(2, PrecisionBudget(30))
    assert iv.width < mpq(1, 10 ** 20)
    # both enclose ln 2, so they must overlap
    assert iv.lo <= rat(hi) and rat(lo) <= iv.hi
    assert mp(iv.lo) <= mpmath.log(2) <= mp(iv.hi)


@pytest.mark.parametrize("x", [Fraction(3, 2), Fraction(10001, 10000), Fraction(7, 4), Fraction(2)])
def test_ln_reduced_arguments_against_long_series(x):
    lo, hi = ln_atanh_oracle(x)
    iv = iv_ln(x)
    assert iv.lo <= rat(hi) and rat(lo) <= iv.hi


def test_ln_four_is_twice_ln_two():
    b = PrecisionBudget(25)
    four = iv_ln(4, b)
    twice = iv_add(iv_ln(2, b), iv_ln(2, b))
    assert four.intersects(twice)
    assert mp(four.lo) <= mpmath.log(4) <= mp(four.hi)


def test_ln_domain():
    with pytest.raises(DomainError):
        iv_ln(0)
    with pytest.raises(DomainError):
        iv_ln(-2)


@pytest.mark.parametrize("n", [2, 3, 10, 1000, 65537, 999_999, 10 ** 6])
def test_default_budget_width(n):
    iv = iv_ln(n)
    assert iv.width < mpq(1, 10 ** 30)
    assert mp(iv.lo) <= mpmath.log(n) <= mp(iv.hi)


@settings(max_examples=200)
@given(positive)
def test_ln_contains_true_value(x):
    iv = iv_ln(x)
    assert mp(iv.lo) <= mpmath.log(mp(x)) <= mp(iv.hi)


@given(positive, positive)
def test_ln_additivity(a, b):
    assert iv_ln(rat(a) * rat(b)).intersects(iv_ln(a) + iv_ln(b))


@given(positive, positive)
def test_ln_monotone(a, b):
    if a == b:
        return
    a, b = sorted((a, b))
    assert iv_ln(a).lo < iv_ln(b).hi


@settings(max_examples=60)
@given(positive, st.integers(1, 60), st.integers(0, 20))
def test_budget_never_widens(x, t1, extra):
    w1 = iv_ln(x, PrecisionBudget(t1)).width
    w2 = iv_ln(x, PrecisionBudget(t1 + extra)).width
    assert w2 <= w1


def test_truncate_decimal():
    assert truncate_decimal(mpq(25, 12), 5) == "2.08333"
    assert truncate_decimal(mpq(-1, 3), 4) == "-0.3333"
    assert truncate_decimal(mpq(-1, 10 ** 9), 4) == "0.0000"
    assert truncate_decimal(mpq(7, 2), 0) == "3"


def test_directed_decimal_bounds():
    x = mpq(2, 3)
    assert directed_decimal(x, 3, up=False) == "0.666"
    assert directed_decimal(x, 3, up=True) == "0.667"
    assert directed_decimal(-x, 3, up=False) == "-0.667"


def test_agreed_decimal():
    text, places = agreed_decimal(RatInterval(mpq(57721, 100000), mpq(57729, 100000)), 10)
    assert (text, places) == ("0.5772", 4)
    text, places = agreed_decimal(RatInterval(mpq(9, 10), mpq(11, 10)), 5)
    assert text is None and places == -1
