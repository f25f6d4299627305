"""Rigorous remainder bounds: the alternating-series (Leibniz) bracket and
the integral-test sandwich for power-law terms.

Convention: a :class:`TailBound` built by :func:`integral_test_tail` for
index ``n`` bounds ``sum(f(p) for p > n)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from gmpy2 import mpq

from harmonic_cert.numerics import BigRational, DomainError, rat


class BoundMethod(enum.Enum):
    LEIBNIZ = "leibniz"
    INTEGRAL_TEST = "integral-test"


@dataclass(frozen=True)
class TailBound:
    n: int | None
    lower: BigRational
    upper: BigRational
    method: BoundMethod

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("tail bound has lower > upper")

    @property
    def width(self) -> BigRational:
        return self.upper - self.lower

    def strictly_contains(self, lo, hi=None) -> bool:
        """``lower < lo`` and ``hi < upper`` (hi defaults to lo)."""
        lo = rat(lo)
        hi = lo if hi is None else rat(hi)
        return self.lower < lo and hi < self.upper


@dataclass(frozen=True)
class PowerLawTerm:
    """The series term ``f(p) = c / p**k``."""

    c: BigRational
    k: int

    def __post_init__(self):
        object.__setattr__(self, "c", rat(self.c))
        if self.c <= 0:
            raise DomainError("power-law coefficient must be positive")
        if self.k <= 1:
            raise DomainError(f"sum of c/p**{self.k} diverges")

    def __call__(self, p) -> BigRational:
        return self.c / mpq(p) ** self.k

    def tail_integral(self, x) -> BigRational:
        """Integral of c / t**k from x to infinity."""
        return self.c / ((self.k - 1) * mpq(x) ** (self.k - 1))


def leibniz_bracket(partial_sum, first_omitted, n: int | None = None) -> TailBound:
    """Bracket for the full sum of an alternating series after a partial sum.

    The caller guarantees the omitted terms decrease monotonically to zero
    in magnitude. The remainder then has the sign of ``first_omitted`` and
    is no larger in magnitude.
    """
    s, a = rat(partial_sum), rat(first_omitted)
    if a >= 0:
        return TailBound(n, s, s + a, BoundMethod.LEIBNIZ)
    return TailBound(n, s + a, s, BoundMethod.LEIBNIZ)


def integral_test_tail(term: PowerLawTerm, n: int) -> TailBound:
    """``int_{n+1}^inf f < sum_{p > n} f(p) < int_n^inf f``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return TailBound(n, term.tail_integral(n + 1), term.tail_integral(n),
                     BoundMethod.INTEGRAL_TEST)


SIGMA_LEADING = PowerLawTerm(mpq(1, 6), 3)
SIGMA_SECOND = PowerLawTerm(mpq(1, 4), 4)


@dataclass(frozen=True)
class SigmaTailSandwich(TailBound):
    """Sandwich on the sliver tail, plus its simplified lower bound."""

    simplified_lower: BigRational = mpq(0)


def sigma_tail_sandwich(n: int) -> SigmaTailSandwich:
    """Bounds on the tail ``sum(sigma_p for p >= n)``.

    Built from the sliver bracket ``1/(6p^3) - 1/(4p^4) < sigma_p < 1/(6p^3)``
    and integral-test bounds on the two power-law series:
    ``1/(12(n+1)^2) - 1/(12n^3) < tail < 1/(12n^2)``.
    ``simplified_lower`` is ``1/(12n^2) - 1/(4n^3)``, which the lower bound
    always exceeds.
    """
    if n < 2:
        raise DomainError("the sliver bracket needs n >= 2")
    lead = integral_test_tail(SIGMA_LEADING, n)
    second = integral_test_tail(SIGMA_SECOND, n)
    return SigmaTailSandwich(
        n=n,
        lower=lead.lower - second.upper,
        upper=lead.upper,
        method=BoundMethod.INTEGRAL_TEST,
        simplified_lower=mpq(1, 12 * n * n) - mpq(1, 4 * n ** 3),
    )


def sandwich_lower_exceeds_simplified(n: int) -> bool:
    """Exact check of ``1/(12(n+1)^2) - 1/(12n^3) > 1/(12n^2) - 1/(4n^3)``."""
    lhs = mpq(1, 12 * (n + 1) ** 2) - mpq(1, 12 * n ** 3)
    rhs = mpq(1, 12 * n * n) - mpq(1, 4 * n ** 3)
    return lhs > rhs
