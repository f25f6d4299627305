"""Areas of the trapezoid under the chord of y = 1/x on [n, n+1].

The trapezoid splits into a rectangle of height 1/(n+1), the curvilinear
triangle ``delta_n`` between the curve and that rectangle, and the sliver
``sigma_n`` between the chord and the curve. Both curved areas reduce to
``ln(1 + 1/n)``, which is enclosed directly rather than as a difference of
two logarithms.
"""
from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from harmonic_cert.harmonic import gamma_n
from harmonic_cert.numerics import (
    DEFAULT_BUDGET,
    BigRational,
    DomainError,
    PrecisionBudget,
    RatInterval,
    as_interval,
    iv_ln,
)
from harmonic_cert.series_bounds import TailBound, leibniz_bracket


@dataclass(frozen=True)
class TrapezoidDecomposition:
    n: int
    rect_area: BigRational
    triangle_area: BigRational
    delta: RatInterval
    sigma: RatInterval

    @property
    def trapezoid_area(self) -> BigRational:
        return (mpq(1, self.n) + mpq(1, self.n + 1)) / 2


def log_ratio(n: int, budget: PrecisionBudget = DEFAULT_BUDGET) -> RatInterval:
    """Enclosure of ``ln((n+1)/n)``, the area under 1/x on [n, n+1]."""
    return iv_ln(mpq(n + 1, n), budget)


def decompose(n: int, budget: PrecisionBudget = DEFAULT_BUDGET) -> TrapezoidDecomposition:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    area_under_curve = log_ratio(n, budget)
    rect = mpq(1, n + 1)
    trapezoid = (mpq(1, n) + rect) / 2
    return TrapezoidDecomposition(
        n=n,
        rect_area=rect,
        triangle_area=(mpq(1, n) - rect) / 2,
        delta=area_under_curve - rect,
        sigma=trapezoid - area_under_curve,
    )


def delta_partial_sum(n: int, N: int, budget: PrecisionBudget = DEFAULT_BUDGET) -> RatInterval:
    """Enclosure of ``delta_n + ... + delta_{N-1}``, one area at a time."""
    if not 1 <= n < N:
        raise DomainError(f"need 1 <= n < N, got n={n}, N={N}")
    lo = hi = mpq(0)
    for p in range(n, N):
        d = decompose(p, budget).delta
        lo += d.lo
        hi += d.hi
    return RatInterval(lo, hi)


def delta_tail(n: int, gamma, budget: PrecisionBudget = DEFAULT_BUDGET,
               h: BigRational | None = None) -> RatInterval:
    """Enclosure of ``sum(delta_p for p >= n)``, which telescopes to gamma_n - gamma."""
    return gamma_n(n, budget, h) - as_interval(gamma)


def sigma_tail(n: int, gamma, budget: PrecisionBudget = DEFAULT_BUDGET,
               h: BigRational | None = None) -> RatInterval:
    """Enclosure of ``sum(sigma_p for p >= n) = 1/(2n) - (H_n - ln n - gamma)``."""
    return mpq(1, 2 * n) - delta_tail(n, gamma, budget, h)


@dataclass(frozen=True)
class SigmaSeriesTerm:
    """Coefficient of ``1/n**k`` in the power series of sigma_n."""

    k: int
    coefficient: BigRational


def sigma_series_coefficient(k: int) -> BigRational:
    """``(-1)**(k+1) * (1/2 - 1/k)``; the series starts at k = 3."""
    if k < 3:
        raise DomainError(f"sigma series starts at k = 3, got {k}")
    c = mpq(1, 2) - mpq(1, k)
    return c if k % 2 else -c


def sigma_series_terms(K: int) -> list[SigmaSeriesTerm]:
    return [SigmaSeriesTerm(k, sigma_series_coefficient(k)) for k in range(3, K + 1)]


def default_series_order(n: int, target_width) -> int:
    """Smallest K with ``(1/2) n**-(K+1)`` below 1% of ``target_width``."""
    if n < 2:
        raise DomainError("the sigma series needs n >= 2")
    goal = mpq(target_width) / 100
    K = 3
    while mpq(1, 2) / mpq(n) ** (K + 1) >= goal:
        K += 1
    return K


def sigma_series_eval(n: int, K: int | None = None, target_width=mpq(1, 10 ** 30)) -> TailBound:
    """Leibniz bracket on sigma_n from the series truncated after ``1/n**K``.

    The term magnitudes ``(1/2 - 1/k) / n**k`` decrease only for n >= 2; at
    n = 1 they grow toward 1/2 and the bracket would be meaningless.
    """
    if n < 2:
        raise DomainError(
            "sigma series terms do not decrease at n = 1; the Leibniz bracket does not apply")
    if K is None:
        K = default_series_order(n, target_width)
    if K < 3:
        raise DomainError(f"truncation order must be >= 3, got {K}")
    x = mpq(1, n)
    partial = sum((sigma_series_coefficient(k) * x ** k for k in range(3, K + 1)), mpq(0))
    first_omitted = sigma_series_coefficient(K + 1) * x ** (K + 1)
    return leibniz_bracket(partial, first_omitted, n)
