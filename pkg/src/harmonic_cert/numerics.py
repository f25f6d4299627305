"""Exact rationals and rational-endpoint interval arithmetic.

Rationals are ``gmpy2.mpq`` values, which are always kept in lowest terms
with a positive denominator. Interval endpoints are rationals too, so
``+ - * /`` on intervals are exact; only :func:`iv_ln` introduces width.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

import gmpy2
from gmpy2 import mpq, mpz

BigRational = type(mpq())
Number = Union[int, Fraction, BigRational]


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class PrecisionError(ArithmeticError):
    """An enclosure is too wide to decide the requested comparison."""


def rat(x, den=None) -> BigRational:
    """Coerce ints, Fractions, mpq or ``(num, den)`` to an exact ``mpq``."""
    if den is not None:
        if den == 0:
            raise DomainError("zero denominator")
        return mpq(x, den)
    if isinstance(x, BigRational):
        return x
    if isinstance(x, (int, type(mpz()))):
        return mpq(x)
    if isinstance(x, Rational):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, float):
        # exact binary value of the double
        return mpq(*x.as_integer_ratio())
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def rat_add(a, b) -> BigRational:
    return rat(a) + rat(b)


def rat_sub(a, b) -> BigRational:
    return rat(a) - rat(b)


def rat_mul(a, b) -> BigRational:
    return rat(a) * rat(b)


def rat_div(a, b) -> BigRational:
    b = rat(b)
    if b == 0:
        raise DomainError("division by zero")
    return rat(a) / b


def floor_div_pow2(x: BigRational, bits: int) -> BigRational:
    """Largest multiple of 2**-bits that is <= x."""
    return mpq(gmpy2.f_div(x.numerator << bits, x.denominator), mpz(1) << bits)


def ceil_div_pow2(x: BigRational, bits: int) -> BigRational:
    """Smallest multiple of 2**-bits that is >= x."""
    return mpq(gmpy2.c_div(x.numerator << bits, x.denominator), mpz(1) << bits)


@dataclass(frozen=True)
class PrecisionBudget:
    """Controls how far the logarithm series is summed.

    ``terms`` is the number of atanh series terms; the fixed-point working
    precision grows with it so a larger budget never gives a wider result.
    """

    terms: int = 40

    def __post_init__(self):
        if self.terms < 1:
            raise ValueError("budget must be a positive number of terms")

    @property
    def bits(self) -> int:
        return 4 * self.terms + 64


DEFAULT_BUDGET = PrecisionBudget()


@dataclass(frozen=True)
class RatInterval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: BigRational
    hi: BigRational

    def __post_init__(self):
        lo, hi = rat(self.lo), rat(self.hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x) -> "RatInterval":
        x = rat(x)
        return cls(x, x)

    @property
    def width(self) -> BigRational:
        return self.hi - self.lo

    @property
    def mid(self) -> BigRational:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        if isinstance(x, RatInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        x = rat(x)
        return self.lo <= x <= self.hi

    def intersects(self, other: "RatInterval") -> bool:
        other = as_interval(other)
        return self.lo <= other.hi and other.lo <= self.hi

    def intersection(self, other: "RatInterval") -> "RatInterval":
        other = as_interval(other)
        if not self.intersects(other):
            raise ValueError("intervals are disjoint")
        return RatInterval(max(self.lo, other.lo), min(self.hi, other.hi))

    def strictly_inside(self, lower, upper) -> bool:
        """True when ``lower < lo`` and ``hi < upper``."""
        return rat(lower) < self.lo and self.hi < rat(upper)

    def abs(self) -> "RatInterval":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return RatInterval(-self.hi, -self.lo)
        return RatInterval(mpq(0), max(-self.lo, self.hi))

    def rounded_out(self, bits: int) -> "RatInterval":
        """Widen outward to endpoints that are multiples of 2**-bits."""
        return RatInterval(floor_div_pow2(self.lo, bits), ceil_div_pow2(self.hi, bits))

    def __add__(self, other):
        return iv_add(self, other)

    def __radd__(self, other):
        return iv_add(other, self)

    def __sub__(self, other):
        return iv_sub(self, other)

    def __rsub__(self, other):
        return iv_sub(other, self)

    def __mul__(self, other):
        return iv_mul(self, other)

    def __rmul__(self, other):
        return iv_mul(other, self)

    def __truediv__(self, other):
        return iv_div(self, other)

    def __rtruediv__(self, other):
        return iv_div(other, self)

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __repr__(self):
        return f"RatInterval({self.lo}, {self.hi})"


def as_interval(x) -> RatInterval:
    if isinstance(x, RatInterval):
        return x
    to_interval = getattr(x, "interval", None)
    if isinstance(to_interval, RatInterval):
        return to_interval
    return RatInterval.point(x)


def iv_add(a, b) -> RatInterval:
    a, b = as_interval(a), as_interval(b)
    return RatInterval(a.lo + b.lo, a.hi + b.hi)


def iv_sub(a, b) -> RatInterval:
    a, b = as_interval(a), as_interval(b)
    return RatInterval(a.lo - b.hi, a.hi - b.lo)


def iv_mul(a, b) -> RatInterval:
    a, b = as_interval(a), as_interval(b)
    products = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return RatInterval(min(products), max(products))


def iv_div(a, b) -> RatInterval:
    a, b = as_interval(a), as_interval(b)
    if b.lo <= 0 <= b.hi:
        raise DomainError(f"division by an interval containing zero: {b!r}")
    return iv_mul(a, RatInterval(1 / b.hi, 1 / b.lo))


# -- logarithm ---------------------------------------------------------------

def _atanh_fixed(a: int, b: int, terms: int, bits: int) -> tuple[int, int]:
    """Bounds ``L <= 2**bits * atanh(a/b) <= U`` for ``0 <= a/b <= 1/3``.

    Powers of ``t = a/b`` are carried in fixed point, rounded down for the
    lower sum and up for the upper sum; the upper sum also gets the
    geometric tail ``t**(2J+1) / ((2J+1) (1 - t**2))``.
    """
    if a == 0:
        return 0, 0
    a, b = mpz(a), mpz(b)
    a2, b2 = a * a, b * b
    scale = mpz(1) << bits
    p_lo = gmpy2.f_div(scale * a, b)
    p_hi = gmpy2.c_div(scale * a, b)
    s_lo = s_hi = mpz(0)
    j = 0
    while j < terms:
        d = 2 * j + 1
        s_lo += p_lo // d
        s_hi += gmpy2.c_div(p_hi, d)
        p_lo = gmpy2.f_div(p_lo * a2, b2)
        p_hi = gmpy2.c_div(p_hi * a2, b2)
        j += 1
        if p_hi <= 1:
            # remaining terms are below one unit; tail bound finishes it
            break
    d = 2 * j + 1
    s_hi += gmpy2.c_div(p_hi * b2, d * (b2 - a2))
    return int(s_lo), int(s_hi)


@lru_cache(maxsize=64)
def _ln2_fixed(terms: int, bits: int) -> tuple[int, int]:
    lo, hi = _atanh_fixed(1, 3, terms, bits)
    return 2 * lo, 2 * hi


@lru_cache(maxsize=1 << 16)
def _iv_ln_cached(x: BigRational, terms: int, bits: int) -> RatInterval:
    p, q = x.numerator, x.denominator
    # x = 2**k * m with 1 <= m < 2
    k = p.bit_length() - q.bit_length()
    if k >= 0:
        num, den = p, q << k
    else:
        num, den = p << -k, q
    if num < den:
        k -= 1
        num <<= 1
    elif num >= 2 * den:
        k += 1
        den <<= 1
    # ln m = 2 atanh((m - 1) / (m + 1)), ratio <= 1/3
    lo, hi = _atanh_fixed(num - den, num + den, terms, bits)
    lo, hi = 2 * lo, 2 * hi
    if k:
        l2_lo, l2_hi = _ln2_fixed(terms, bits)
        if k > 0:
            lo, hi = lo + k * l2_lo, hi + k * l2_hi
        else:
            lo, hi = lo + k * l2_hi, hi + k * l2_lo
    scale = mpz(1) << bits
    return RatInterval(mpq(lo, scale), mpq(hi, scale))


def iv_ln(x, budget: PrecisionBudget = DEFAULT_BUDGET) -> RatInterval:
    """Certified enclosure of the natural logarithm of a positive rational."""
    x = rat(x)
    if x <= 0:
        raise DomainError(f"ln is undefined for {x}")
    return _iv_ln_cached(x, budget.terms, budget.bits)


# -- decimal output ----------------------------------------------------------

def truncate_decimal(x, digits: int) -> str:
    """Fixed-point decimal of ``x`` truncated toward zero."""
    x = rat(x)
    scaled = abs(x) * mpz(10) ** digits
    q = int(gmpy2.f_div(scaled.numerator, scaled.denominator))
    sign = "-" if x < 0 and q != 0 else ""
    whole, frac = divmod(q, 10 ** digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


def directed_decimal(x, digits: int, up: bool) -> str:
    """Decimal rounded toward +inf (``up``) or -inf, so it still bounds ``x``."""
    x = rat(x)
    scaled = x * mpz(10) ** digits
    q = gmpy2.c_div(scaled.numerator, scaled.denominator) if up else \
        gmpy2.f_div(scaled.numerator, scaled.denominator)
    return truncate_decimal(mpq(q, mpz(10) ** digits), digits)


def agreed_decimal(iv: RatInterval, digits: int) -> tuple[str | None, int]:
    """Longest truncated decimal (at most ``digits`` places) shared by both ends.

    Returns ``(text, places)``; ``text`` is None if even the integer parts
    differ. Truncation is monotone, so every member of ``iv`` truncates to
    the same string.
    """
    for places in range(digits, -1, -1):
        lo_s = truncate_decimal(iv.lo, places)
        if lo_s == truncate_decimal(iv.hi, places):
            return lo_s, places
    return None, -1


def format_enclosure(iv: RatInterval, digits: int) -> str:
    text, _ = agreed_decimal(iv, digits)
    if text is None:
        return f"{directed_decimal(iv.lo, digits, False)}..{directed_decimal(iv.hi, digits, True)}"
    return text
