"""Exact harmonic numbers, gamma_n = H_n - ln n, and enclosures of Euler's constant.

Euler's constant is never taken from a table. :func:`gamma_enclosure` pins
it down from the quadratic approximation
``H_n = ln n + gamma + 1/(2n) - 1/(12n^2) + eps_n`` with ``0 < eps_n < 1/(4n^3)``
evaluated at a large ``n``; the residual checks then use an enclosure
derived at ``m >= 10 n`` so the uncertainty in gamma stays negligible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from gmpy2 import mpq, mpz

from harmonic_cert import kernels
from harmonic_cert.numerics import (
    DEFAULT_BUDGET,
    BigRational,
    DomainError,
    PrecisionBudget,
    PrecisionError,
    RatInterval,
    as_interval,
    iv_ln,
    rat,
)

SPLIT_THRESHOLD = 64
# Above this many terms gamma_enclosure switches to the fixed-point kernel.
EXACT_HARMONIC_LIMIT = 200_000
# oresme_check refuses 2**k beyond this many terms.
ORESME_MAX_TERMS = 1 << 22


def _split(a: int, b: int) -> tuple[mpz, mpz]:
    """``(p, q)`` with ``p/q = sum(1/r for r in [a, b))``, not reduced."""
    if b - a <= SPLIT_THRESHOLD:
        p, q = mpz(0), mpz(1)
        for r in range(a, b):
            p = p * r + q
            q *= r
        return p, q
    m = (a + b) // 2
    p1, q1 = _split(a, m)
    p2, q2 = _split(m, b)
    return p1 * q2 + p2 * q1, q1 * q2


def harmonic_exact(n: int) -> BigRational:
    """H_n = 1 + 1/2 + ... + 1/n by binary splitting, in lowest terms."""
    if n < 1:
        raise DomainError(f"harmonic_exact needs n >= 1, got {n}")
    return mpq(*_split(1, n + 1))


def harmonic_incremental(n: int) -> Fraction:
    """H_n by plain left-to-right ``Fraction`` summation.

    Deliberately shares no code with :func:`harmonic_exact`; used as its
    oracle.
    """
    if n < 1:
        raise DomainError(f"harmonic_incremental needs n >= 1, got {n}")
    h = Fraction(0)
    for r in range(1, n + 1):
        h += Fraction(1, r)
    return h


def harmonic_sequence(n_max: int, start: int = 1) -> Iterator[tuple[int, BigRational]]:
    """Yield ``(n, H_n)`` for ``start <= n <= n_max`` incrementally."""
    h = harmonic_exact(start)
    yield start, h
    for n in range(start + 1, n_max + 1):
        h += mpq(1, n)
        yield n, h


def harmonic_enclosure(n: int, budget: PrecisionBudget = DEFAULT_BUDGET,
                       exact_limit: int = EXACT_HARMONIC_LIMIT) -> RatInterval:
    """Enclosure of H_n: a point interval up to ``exact_limit``, else fixed point.

    The fixed-point sum rounds each 1/r down to a multiple of 2**-P, so
    ``[S, S + n] / 2**P`` contains H_n.
    """
    if n < 1:
        raise DomainError(f"harmonic_enclosure needs n >= 1, got {n}")
    if n <= exact_limit:
        return RatInterval.point(harmonic_exact(n))
    limbs = -(-budget.bits // kernels.LIMB_BITS)
    s = kernels.harmonic_fixed_point(n, limbs)
    scale = mpz(1) << (kernels.LIMB_BITS * limbs)
    return RatInterval(mpq(s, scale), mpq(s + n, scale))


def oresme_check(k: int, max_terms: int = ORESME_MAX_TERMS) -> bool:
    """Exact test of ``H_{2^k} > 1 + k/2``.

    False at k = 0 and k = 1, where the two sides are equal.
    """
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    if 2 ** k > max_terms:
        raise OverflowError(f"2**{k} terms exceeds the limit of {max_terms}")
    return harmonic_exact(2 ** k) > 1 + mpq(k, 2)


def gamma_n(n: int, budget: PrecisionBudget = DEFAULT_BUDGET,
            h: BigRational | None = None) -> RatInterval:
    """Enclosure of H_n - ln n."""
    if h is None:
        h = harmonic_exact(n)
    return h - iv_ln(n, budget)


@dataclass(frozen=True)
class GammaEnclosure:
    """Certified bracket ``lo < gamma < hi`` obtained at ``derived_at_n``."""

    lo: BigRational
    hi: BigRational
    derived_at_n: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("gamma enclosure has lo > hi")

    @property
    def interval(self) -> RatInterval:
        return RatInterval(self.lo, self.hi)

    @property
    def width(self) -> BigRational:
        return self.hi - self.lo

    def intersects(self, other: "GammaEnclosure") -> bool:
        return self.interval.intersects(other.interval)


@lru_cache(maxsize=32)
def gamma_enclosure(n: int, budget: PrecisionBudget = DEFAULT_BUDGET) -> GammaEnclosure:
    """Bracket gamma using ``0 < eps_n < 1/(4n^3)`` at this n.

    With ``S`` enclosing ``H_n - ln n - 1/(2n) + 1/(12n^2) = gamma + eps_n``,
    gamma lies in ``[S.lo - 1/(4n^3), S.hi]``. Cached per ``(n, budget)``.
    """
    if n < 1:
        raise DomainError(f"gamma_enclosure needs n >= 1, got {n}")
    s = harmonic_enclosure(n, budget) - iv_ln(n, budget) - mpq(1, 2 * n) + mpq(1, 12 * n * n)
    # outward rounding keeps downstream denominators small
    bracket = RatInterval(s.lo - mpq(1, 4 * n ** 3), s.hi).rounded_out(budget.bits)
    return GammaEnclosure(bracket.lo, bracket.hi, n)


def default_gamma_source(n: int) -> int:
    """Where to derive gamma when certifying residuals at n."""
    return max(10 ** 4, 10 * n)


def _gamma_interval(gamma) -> RatInterval:
    if gamma is None:
        raise ValueError("a gamma enclosure is required")
    return as_interval(gamma)


def residual_theta(n: int, gamma, budget: PrecisionBudget = DEFAULT_BUDGET,
                   h: BigRational | None = None) -> RatInterval:
    """Enclosure of theta_n in ``H_n = ln n + gamma + 1/(2(n + theta_n))``."""
    gap = gamma_n(n, budget, h) - _gamma_interval(gamma)
    if gap.lo <= 0:
        raise PrecisionError(
            f"H_n - ln n - gamma is not certified positive at n={n}; "
            "raise the budget or derive gamma at a larger n")
    return 1 / (2 * gap) - n


def residual_epsilon(n: int, gamma, budget: PrecisionBudget = DEFAULT_BUDGET,
                     h: BigRational | None = None) -> RatInterval:
    """Enclosure of ``eps_n = H_n - ln n - gamma - 1/(2n) + 1/(12n^2)``."""
    return (gamma_n(n, budget, h) - _gamma_interval(gamma)
            - mpq(1, 2 * n) + mpq(1, 12 * n * n))


@dataclass(frozen=True)
class HarmonicRecord:
    n: int
    h_exact: BigRational
    gamma_n: RatInterval
    theta_n: RatInterval
    epsilon_n: RatInterval


def harmonic_record(n: int, gamma, budget: PrecisionBudget = DEFAULT_BUDGET,
                    h: BigRational | None = None) -> HarmonicRecord:
    if h is None:
        h = harmonic_exact(n)
    h = rat(h)
    return HarmonicRecord(
        n=n,
        h_exact=h,
        gamma_n=gamma_n(n, budget, h),
        theta_n=residual_theta(n, gamma, budget, h),
        epsilon_n=residual_epsilon(n, gamma, budget, h),
    )
