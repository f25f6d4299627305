import random

import mpmath
import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from harmonic_cert.geometry import (
    decompose,
    default_series_order,
    delta_partial_sum,
    delta_tail,
    sigma_series_coefficient,
    sigma_series_eval,
    sigma_series_terms,
    sigma_tail,
)
from harmonic_cert.harmonic import harmonic_exact
from harmonic_cert.numerics import DomainError, RatInterval, iv_ln, rat


def mp(x):
    x = rat(x)
    return mpmath.mpf(int(x.numerator)) / int(x.denominator)


def encloses(iv, ref):
    return mp(iv.lo) <= ref <= mp(iv.hi)


def test_decompose_n1():
    d = decompose(1)
    assert encloses(d.delta, mpmath.log(2) - mpmath.mpf(1) / 2)
    assert encloses(d.sigma, mpmath.mpf(3) / 4 - mpmath.log(2))
    assert abs(float(d.delta.mid) - 0.193147) < 1e-6
    assert abs(float(d.sigma.mid) - 0.056853) < 1e-6
    assert mpq(1, 4) in d.delta + d.sigma


def test_decompose_n10_sliver_bracket():
    sigma = decompose(10).sigma
    assert sigma.strictly_inside(mpq(1, 6000) - mpq(1, 40000), mpq(1, 6000))


@given(st.integers(1, 10 ** 6))
def test_decomposition_invariants(n):
    d = decompose(n)
    assert d.rect_area == mpq(1, n + 1)
    assert d.triangle_area == (mpq(1, n) - mpq(1, n + 1)) / 2
    assert d.triangle_area in d.delta + d.sigma
    assert d.rect_area + d.triangle_area == d.trapezoid_area
    assert d.delta.lo > 0 and d.sigma.lo > 0


def test_delta_partial_sum_examples():
    assert encloses(delta_partial_sum(1, 2), mpmath.log(2) - mpmath.mpf(1) / 2)
    h100 = harmonic_exact(100)
    assert encloses(delta_partial_sum(1, 100), mpmath.log(100) - (mp(h100) - 1))
    assert encloses(delta_partial_sum(5, 6), mpmath.log(mpmath.mpf(6) / 5) - mpmath.mpf(1) / 6)
    with pytest.raises(DomainError):
        delta_partial_sum(5, 5)


def test_telescoping_random_pairs():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 400)
        N = rng.randint(n + 1, 500)
        telescoped = (iv_ln(N) - iv_ln(n)) - (harmonic_exact(N) - harmonic_exact(n))
        assert delta_partial_sum(n, N).intersects(telescoped)


def test_delta_tail(gamma_1e4):
    t1 = delta_tail(1, gamma_1e4)
    assert encloses(t1, 1 - mpmath.euler)
    assert abs(float(t1.mid) - 0.422784) < 1e-6
    combined = delta_partial_sum(1, 50) + delta_tail(50, gamma_1e4)
    assert combined.intersects(t1)
    assert delta_tail(1000, gamma_1e4).strictly_inside(0, mpq(1, 1000))


def test_sigma_tail(gamma_1e4):
    s1 = sigma_tail(1, gamma_1e4)
    assert encloses(s1, mpmath.euler - mpmath.mpf(1) / 2)
    assert abs(float(s1.mid) - 0.077216) < 1e-6
    assert sigma_tail(10, gamma_1e4).strictly_inside(
        mpq(1, 12 * 121) - mpq(1, 12000), mpq(1, 1200))
    assert sigma_tail(100, gamma_1e4).strictly_inside(
        mpq(1, 12 * 101 ** 2) - mpq(1, 12 * 10 ** 6), mpq(1, 12 * 10 ** 4))


def test_sigma_coefficients():
    assert sigma_series_coefficient(3) == mpq(1, 6)
    assert sigma_series_coefficient(4) == mpq(-1, 4)
    assert sigma_series_coefficient(5) == mpq(3, 10)
    assert sigma_series_coefficient(6) == mpq(-1, 3)
    with pytest.raises(DomainError):
        sigma_series_coefficient(2)


def test_sigma_terms_shape():
    terms = sigma_series_terms(40)
    mags = [abs(t.coefficient) for t in terms]
    assert all(b > a for a, b in zip(mags, mags[1:]))
    assert all(m < mpq(1, 2) for m in mags)
    assert all((t.coefficient > 0) == (t.k % 2 == 1) for t in terms)


def test_sigma_coefficients_from_power_series():
    # independent route: expand 1/(2n) + 1/(2(n+1)) - ln(1 + 1/n) in x = 1/n with mpmath
    coeffs = mpmath.taylor(lambda x: x / 2 + x / (2 * (1 + x)) - mpmath.log(1 + x), 0, 10)
    for k in range(3, 11):
        assert abs(coeffs[k] - mp(sigma_series_coefficient(k))) < mpmath.mpf(10) ** -30
    assert abs(coeffs[1]) < 1e-30 and abs(coeffs[2]) < 1e-30


def test_sigma_series_eval_examples():
    b = sigma_series_eval(2, 4)
    sigma2 = decompose(2).sigma
    assert b.lower <= sigma2.lo and sigma2.hi <= b.upper
    assert abs(float(sigma2.mid) - (5 / 12 - 0.4054651081081644)) < 1e-12
    b10 = sigma_series_eval(10, 3)
    assert (b10.lower, b10.upper) == (mpq(1, 6000) - mpq(1, 40000), mpq(1, 6000))
    assert decompose(10).sigma in RatInterval(b10.lower, b10.upper)
    assert sigma_series_eval(10, 6).width <= (mpq(1, 2) - mpq(1, 7)) / 10 ** 7


@pytest.mark.parametrize("n", [2, 3, 10, 77, 500])
@pytest.mark.parametrize("K", [3, 5, 9])
def test_series_agrees_with_integral_form(n, K):
    b = sigma_series_eval(n, K)
    assert decompose(n).sigma.intersects(RatInterval(b.lower, b.upper))


def test_sigma_series_rejects_n1():
    with pytest.raises(DomainError):
        sigma_series_eval(1, 5)
    with pytest.raises(DomainError):
        sigma_series_eval(3, 2)


def test_default_order():
    K = default_series_order(10, mpq(1, 10 ** 12))
    assert mpq(1, 2) / mpq(10) ** (K + 1) < mpq(1, 10 ** 14)
    assert mpq(1, 2) / mpq(10) ** K >= mpq(1, 10 ** 14)
    b = sigma_series_eval(10)
    assert b.width < mpq(1, 10 ** 30)
    assert decompose(10).sigma.intersects(RatInterval(b.lower, b.upper))
