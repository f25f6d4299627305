"""Sweeps that certify every inequality and identity of the geometric proof.

Each comparison is three-valued: decided true, decided false (a failure),
or undecided because an enclosure straddles the threshold (a precision
problem, reported separately so it is never mistaken for a counterexample).
"""
from __future__ import annotations

import decimal
import random
from dataclasses import dataclass, field

from gmpy2 import mpq

from harmonic_cert.approximations import EmLevel, approx_euler_maclaurin
from harmonic_cert.geometry import decompose, delta_partial_sum, sigma_series_eval, sigma_tail
from harmonic_cert.harmonic import (
    default_gamma_source,
    gamma_enclosure,
    harmonic_exact,
    harmonic_sequence,
    residual_epsilon,
    residual_theta,
)
from harmonic_cert.numerics import (
    DEFAULT_BUDGET,
    PrecisionBudget,
    PrecisionError,
    RatInterval,
    as_interval,
    iv_ln,
)
from harmonic_cert.series_bounds import sandwich_lower_exceeds_simplified, sigma_tail_sandwich

SUITES = ("epsilon", "theta", "sigma", "tails", "em", "oresme", "identities")
EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3

EM_CHECKED_LEVELS = (EmLevel.HALF_N, EmLevel.QUAD, EmLevel.QUARTIC)
# gamma sources beyond this are not attempted by default (the fixed-point
# harmonic sum is linear in the source index)
MAX_DEFAULT_GAMMA_SOURCE = 2 * 10 ** 7
TELESCOPE_PAIRS = 50
TELESCOPE_SEED = 1729
SERIES_CHECK_LIMIT = 500
SERIES_ORDERS = (3, 5, 9)


def show(x) -> str:
    """Short decimal rendering for reports (display only, not certified)."""
    if isinstance(x, bool):
        return str(x)
    if isinstance(x, RatInterval):
        if x.lo == x.hi:
            return show(x.lo)
        return f"[{show(x.lo)}, {show(x.hi)}]"
    x = mpq(x)
    if x == 0:
        return "0"
    with decimal.localcontext() as ctx:
        ctx.prec = 26
        return "{:.25e}".format(decimal.Decimal(int(x.numerator)) / int(x.denominator))


@dataclass
class Failure:
    n: int
    check: str
    lhs: str
    rhs: str

    def __str__(self):
        return f"n={self.n} check={self.check} lhs={self.lhs} rhs={self.rhs}"


@dataclass
class VerificationReport:
    suite: str
    n_min: int
    n_max: int
    checks_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    undecided: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    gamma_sources: dict[str, int] = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        if self.undecided:
            return "undecided"
        return "pass"

    @property
    def exit_code(self) -> int:
        if self.failures:
            return EXIT_FAIL
        if self.undecided:
            return EXIT_PRECISION
        return EXIT_PASS

    def less(self, n: int, check: str, a, b) -> bool | None:
        """Record the strict comparison ``a < b`` between enclosures."""
        a, b = as_interval(a), as_interval(b)
        self.checks_run += 1
        if a.hi < b.lo:
            return True
        entry = Failure(n, check, show(a), show(b))
        if a.lo >= b.hi:
            self.failures.append(entry)
            return False
        self.undecided.append(entry)
        return None

    def holds(self, n: int, check: str, ok: bool, lhs=None, rhs=None) -> bool:
        """Record a check that is decided outright (exact or set-valued)."""
        self.checks_run += 1
        if not ok:
            self.failures.append(Failure(n, check, "" if lhs is None else show(lhs),
                                         "" if rhs is None else show(rhs)))
        return ok

    def precision_problem(self, n: int, check: str, message: str) -> None:
        self.checks_run += 1
        self.undecided.append(Failure(n, check, message, ""))

    def merge(self, other: "VerificationReport") -> None:
        self.checks_run += other.checks_run
        self.failures.extend(other.failures)
        self.undecided.extend(other.undecided)
        self.notes.extend(other.notes)
        self.gamma_sources.update(other.gamma_sources)

    def render(self, max_listed: int = 20) -> str:
        lines = [
            f"suite: {self.suite}",
            f"range: [{self.n_min}, {self.n_max}]",
        ]
        for name, m in sorted(self.gamma_sources.items()):
            lines.append(f"gamma_source[{name}]: {m}")
        lines += [
            f"checks_run: {self.checks_run}",
            f"failures: {len(self.failures)}",
            f"undecided: {len(self.undecided)}",
            f"status: {self.status}",
        ]
        for title, entries in (("failure", self.failures), ("undecided", self.undecided)):
            for entry in entries[:max_listed]:
                lines.append(f"{title}: {entry}")
            if len(entries) > max_listed:
                lines.append(f"{title}: ... {len(entries) - max_listed} more")
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines) + "\n"


def em_gamma_source(max_n: int) -> int:
    # gamma must be known to well below the QUARTIC first omitted term 1/(252 n^6)
    return min(max(10 ** 4, 10 * max_n * max_n), MAX_DEFAULT_GAMMA_SOURCE)


def _gamma(report: VerificationReport, name: str, m: int, budget: PrecisionBudget):
    report.gamma_sources[name] = m
    return gamma_enclosure(m, budget)


def check_epsilon(max_n: int, budget: PrecisionBudget = DEFAULT_BUDGET,
                  gamma_source: int | None = None, n_min: int = 1) -> VerificationReport:
    """``0 < eps_n < 1/(4n^3)`` for n in [n_min, max_n]."""
    report = VerificationReport("epsilon", n_min, max_n)
    gamma = _gamma(report, "epsilon", gamma_source or default_gamma_source(max_n), budget)
    for n, h in harmonic_sequence(max_n, n_min):
        eps = residual_epsilon(n, gamma, budget, h)
        report.less(n, "epsilon-positive", 0, eps)
        report.less(n, "epsilon-below-1/(4n^3)", eps, mpq(1, 4 * n ** 3))
    return report


def check_theta(max_n: int, budget: PrecisionBudget = DEFAULT_BUDGET,
                gamma_source: int | None = None, n_min: int = 1) -> VerificationReport:
    """``0 < theta_n < 1`` for n in [n_min, max_n]."""
    report = VerificationReport("theta", n_min, max_n)
    gamma = _gamma(report, "theta", gamma_source or default_gamma_source(max_n), budget)
    for n, h in harmonic_sequence(max_n, n_min):
        try:
            theta = residual_theta(n, gamma, budget, h)
        except PrecisionError as exc:
            report.precision_problem(n, "theta-defined", str(exc))
            continue
        report.less(n, "theta-positive", 0, theta)
        report.less(n, "theta-below-1", theta, 1)
    return report


def check_sigma(max_n: int, budget: PrecisionBudget = DEFAULT_BUDGET) -> VerificationReport:
    """Sliver bracket ``1/(6n^3) - 1/(4n^4) < sigma_n < 1/(6n^3)`` for n >= 2."""
    report = VerificationReport("sigma", 1, max_n)
    s1 = decompose(1, budget).sigma
    direct = mpq(3, 4) - iv_ln(2, budget)
    report.holds(1, "sigma-1-equals-3/4-ln2", s1.intersects(direct), s1, direct)
    report.notes.append(
        "n=1: sigma series terms (1/2 - 1/k) do not decrease, so the alternating "
        "bracket is not asserted; sigma_1 checked against 3/4 - ln 2 instead")
    for n in range(2, max_n + 1):
        sigma = decompose(n, budget).sigma
        n3 = mpq(n) ** 3
        report.less(n, "sigma-above-1/(6n^3)-1/(4n^4)", 1 / (6 * n3) - 1 / (4 * n3 * n), sigma)
        report.less(n, "sigma-below-1/(6n^3)", sigma, 1 / (6 * n3))
        if n <= SERIES_CHECK_LIMIT:
            for K in SERIES_ORDERS:
                b = sigma_series_eval(n, K)
                report.holds(n, f"sigma-series-K{K}-agrees",
                             sigma.intersects(RatInterval(b.lower, b.upper)), sigma,
                             RatInterval(b.lower, b.upper))
    return report


def check_tails(max_n: int, budget: PrecisionBudget = DEFAULT_BUDGET,
                gamma_source: int | None = None) -> VerificationReport:
    """Integral-test sandwich on the sliver tail, and its algebraic simplification."""
    report = VerificationReport("tails", 1, max_n)
    gamma = _gamma(report, "tails", gamma_source or default_gamma_source(max_n), budget)
    for n, h in harmonic_sequence(max_n):
        report.holds(n, "sandwich-lower-exceeds-1/(12n^2)-1/(4n^3)",
                     sandwich_lower_exceeds_simplified(n))
        if n < 2:
            continue
        tail = sigma_tail(n, gamma, budget, h)
        sandwich = sigma_tail_sandwich(n)
        report.less(n, "sigma-tail-above-sandwich-lower", sandwich.lower, tail)
        report.less(n, "sigma-tail-below-1/(12n^2)", tail, sandwich.upper)
    return report


def check_em(max_n: int, budget: PrecisionBudget = DEFAULT_BUDGET,
             gamma_source: int | None = None,
             levels=EM_CHECKED_LEVELS) -> VerificationReport:
    """Truncation error has the sign of, and is smaller than, the first omitted term.

    Asserted for n >= 2; n = 1 is measured and written to the notes.
    """
    report = VerificationReport("em", 1, max_n)
    gamma = _gamma(report, "em", gamma_source or em_gamma_source(max_n), budget)
    for n, h in harmonic_sequence(max_n):
        for level in levels:
            t = approx_euler_maclaurin(n, level, gamma, budget, h)
            name = level.name.lower()
            if n == 1:
                report.notes.append(
                    f"n=1 {name}: error={show(t.error)} first_omitted={show(t.first_omitted)} "
                    f"claim_holds={t.claim_holds()}")
                continue
            if t.first_omitted > 0:
                report.less(n, f"em-{name}-sign", 0, t.error)
                report.less(n, f"em-{name}-magnitude", t.error, t.first_omitted)
            else:
                report.less(n, f"em-{name}-sign", t.error, 0)
                report.less(n, f"em-{name}-magnitude", t.first_omitted, t.error)
    return report


def check_oresme(max_n: int) -> VerificationReport:
    """``H_{2^k} > 1 + k/2`` for every k with ``2^k <= max_n``."""
    k_max = max_n.bit_length() - 1
    report = VerificationReport("oresme", 1, max_n)
    for k in range(k_max + 1):
        h = harmonic_exact(2 ** k)
        rhs = 1 + mpq(k, 2)
        if k < 2:
            relation = ">" if h > rhs else ("=" if h == rhs else "<")
            report.notes.append(
                f"k={k}: H_{2 ** k} = {h} {relation} 1 + {k}/2 = {rhs}; strict inequality "
                f"{'holds' if h > rhs else 'fails'} (boundary case, not asserted)")
            continue
        report.holds(2 ** k, f"oresme-k{k}", h > rhs, h, rhs)
    return report


def check_identities(max_n: int, budget: PrecisionBudget = DEFAULT_BUDGET,
                     pairs: int = TELESCOPE_PAIRS, seed: int = TELESCOPE_SEED) -> VerificationReport:
    """Split identity for every n and the telescoping delta sums for random pairs."""
    report = VerificationReport("identities", 1, max_n)
    for n in range(1, max_n + 1):
        d = decompose(n, budget)
        report.holds(n, "split-identity", d.triangle_area in d.delta + d.sigma,
                     d.delta + d.sigma, d.triangle_area)
        report.holds(n, "rect-plus-triangle", d.rect_area + d.triangle_area == d.trapezoid_area,
                     d.rect_area + d.triangle_area, d.trapezoid_area)
    if max_n < 2:
        return report
    rng = random.Random(seed)
    for _ in range(pairs):
        n = rng.randint(1, max_n - 1)
        N = rng.randint(n + 1, max_n)
        summed = delta_partial_sum(n, N, budget)
        telescoped = (iv_ln(N, budget) - iv_ln(n, budget)) - (harmonic_exact(N) - harmonic_exact(n))
        report.holds(n, f"telescoping-N{N}", summed.intersects(telescoped), summed, telescoped)
    return report


def run_suite(suite: str, max_n: int, budget: PrecisionBudget = DEFAULT_BUDGET,
              gamma_source: int | None = None) -> VerificationReport:
    if suite == "all":
        report = VerificationReport("all", 1, max_n)
        for name in SUITES:
            report.merge(run_suite(name, max_n, budget, gamma_source))
        return report
    if suite == "epsilon":
        return check_epsilon(max_n, budget, gamma_source)
    if suite == "theta":
        return check_theta(max_n, budget, gamma_source)
    if suite == "sigma":
        return check_sigma(max_n, budget)
    if suite == "tails":
        return check_tails(max_n, budget, gamma_source)
    if suite == "em":
        return check_em(max_n, budget, gamma_source)
    if suite == "oresme":
        return check_oresme(max_n)
    if suite == "identities":
        return check_identities(max_n, budget)
    raise ValueError(f"unknown suite {suite!r}")
