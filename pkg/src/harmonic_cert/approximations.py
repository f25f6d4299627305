"""Closed-form approximations of H_n and their error certificates."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from gmpy2 import mpq

from harmonic_cert import kernels
from harmonic_cert.harmonic import harmonic_exact
from harmonic_cert.numerics import (
    DEFAULT_BUDGET,
    BigRational,
    PrecisionBudget,
    RatInterval,
    as_interval,
    iv_ln,
    rat,
)


class Method(enum.Enum):
    NAIVE_SUM = "naive"
    YOUNG_LINEAR = "young"
    QUADRATIC = "quadratic"
    EM_K = "em"
    EXACT = "exact"


class EmLevel(enum.IntEnum):
    """How many correction terms of the Euler-Maclaurin expansion are kept."""

    LOG_ONLY = 0
    HALF_N = 1
    QUAD = 2
    QUARTIC = 3
    SEXTIC = 4


EM_LEVEL_NAMES = {
    EmLevel.LOG_ONLY: "log",
    EmLevel.HALF_N: "half",
    EmLevel.QUAD: "quad",
    EmLevel.QUARTIC: "quartic",
    EmLevel.SEXTIC: "sextic",
}

# (signed coefficient, power of 1/n) for each correction term, in order.
# The last entry is only ever used as the first omitted term of SEXTIC.
EM_TERMS: tuple[tuple[BigRational, int], ...] = (
    (mpq(1, 2), 1),
    (mpq(-1, 12), 2),
    (mpq(1, 120), 4),
    (mpq(-1, 252), 6),
    (mpq(1, 240), 8),
)


def em_term(index: int, n: int) -> BigRational:
    coeff, power = EM_TERMS[index]
    return coeff / mpq(n) ** power


@dataclass(frozen=True)
class EmTruncation:
    n: int
    level: EmLevel
    value: RatInterval
    first_omitted: BigRational
    error: RatInterval

    def claim_holds(self) -> bool | None:
        """Is the error strictly between 0 and the first omitted term?

        Returns None when the enclosure is too wide to decide.
        """
        lower, upper = sorted((mpq(0), self.first_omitted))
        if lower < self.error.lo and self.error.hi < upper:
            return True
        if self.error.hi <= lower or self.error.lo >= upper:
            return False
        return None


@dataclass(frozen=True)
class ApproxResult:
    n: int
    method: Method
    value: RatInterval
    certified_abs_error_bound: BigRational | None
    label: str = ""

    def abs_error(self, h: BigRational | None = None) -> RatInterval:
        """Enclosure of ``|H_n - value|``."""
        if h is None:
            h = harmonic_exact(self.n)
        return (rat(h) - self.value).abs()

    def within_bound(self, h: BigRational | None = None) -> bool | None:
        """None when no bound is certified for this method."""
        if self.certified_abs_error_bound is None:
            return None
        return self.abs_error(h).hi <= self.certified_abs_error_bound


def _base(n: int, gamma, budget: PrecisionBudget) -> RatInterval:
    return iv_ln(n, budget) + as_interval(gamma)


def approx_quadratic(n: int, gamma, budget: PrecisionBudget = DEFAULT_BUDGET) -> ApproxResult:
    """``ln n + gamma + 1/(2n) - 1/(12n^2)``, off by less than ``1/(4n^3)``."""
    value = _base(n, gamma, budget) + mpq(1, 2 * n) - mpq(1, 12 * n * n)
    bound = mpq(1, 4 * n ** 3) + value.width
    return ApproxResult(n, Method.QUADRATIC, value, bound, "quadratic")


def young_bracket_width(n: int) -> BigRational:
    return mpq(1, 2 * n) - mpq(1, 2 * (n + 1))


def approx_young(n: int, gamma, budget: PrecisionBudget = DEFAULT_BUDGET) -> ApproxResult:
    """The linear form ``ln n + gamma + 1/(2(n + theta))`` evaluated at theta = 0.

    For theta in (0, 1) the exact value sits below this by less than
    ``1/(2n) - 1/(2(n+1))``.
    """
    value = _base(n, gamma, budget) + mpq(1, 2 * n)
    bound = young_bracket_width(n) + value.width
    return ApproxResult(n, Method.YOUNG_LINEAR, value, bound, "young")


def approx_euler_maclaurin(n: int, level: EmLevel, gamma,
                           budget: PrecisionBudget = DEFAULT_BUDGET,
                           h: BigRational | None = None) -> EmTruncation:
    level = EmLevel(level)
    value = _base(n, gamma, budget)
    for i in range(level):
        value = value + em_term(i, n)
    if h is None:
        h = harmonic_exact(n)
    return EmTruncation(
        n=n,
        level=level,
        value=value,
        first_omitted=em_term(int(level), n),
        error=rat(h) - value,
    )


def em_result(n: int, level: EmLevel, gamma,
              budget: PrecisionBudget = DEFAULT_BUDGET) -> ApproxResult:
    """Truncation as an :class:`ApproxResult`, bounded by the first omitted term."""
    trunc = approx_euler_maclaurin(n, level, gamma, budget)
    bound = abs(trunc.first_omitted) + trunc.value.width
    return ApproxResult(n, Method.EM_K, trunc.value, bound,
                        f"em:{EM_LEVEL_NAMES[EmLevel(level)]}")


def approx_naive_float(n: int) -> float:
    """Uncertified left-to-right float sum of 1/r."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return kernels.naive_float_sum(n)


def naive_result(n: int) -> ApproxResult:
    value = RatInterval.point(rat(approx_naive_float(n)))
    return ApproxResult(n, Method.NAIVE_SUM, value, None, "naive")


def quadratic_float(n: int, gamma: float) -> float:
    """Plain double precision quadratic formula, for benchmarking."""
    return math.log(n) + gamma + 0.5 / n - 1.0 / (12.0 * n * n)
