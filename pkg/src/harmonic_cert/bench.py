"""Wall-clock comparison of O(n) summation against the O(1) closed forms."""
from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from harmonic_cert import kernels
from harmonic_cert.approximations import approx_quadratic, quadratic_float
from harmonic_cert.harmonic import gamma_enclosure
from harmonic_cert.numerics import DEFAULT_BUDGET, PrecisionBudget

AGREEMENT_RTOL = 1e-8
# the pure-Python loop is skipped above this n
PYTHON_NAIVE_LIMIT = 10 ** 7


@dataclass(frozen=True)
class BenchRow:
    n: int
    method: str
    median_s: float
    value: float
    agrees: bool


def median_time(fn, reps: int) -> tuple[float, object]:
    times, result = [], None
    for _ in range(reps):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def agrees(n: int, naive: float, closed: float) -> bool:
    """Relative 1e-8 for n >= 100; below that the formula's own error 1/(4n^3) dominates."""
    if n >= 100:
        return abs(naive - closed) <= AGREEMENT_RTOL * abs(naive)
    return abs(naive - closed) <= 1.0 / (4 * n ** 3) + 1e-12


def run_bench(n_list, reps: int, budget: PrecisionBudget = DEFAULT_BUDGET,
              gamma_source: int = 10 ** 4) -> list[BenchRow]:
    gamma = gamma_enclosure(gamma_source, budget)
    gamma_f = float(gamma.interval.mid)
    rows = []
    for n in n_list:
        t_naive, naive = median_time(lambda: kernels.naive_float_sum(n), reps)
        rows.append(BenchRow(n, f"naive-float[{kernels.BACKEND}]", t_naive, naive, True))
        if kernels.BACKEND != "python" and n <= PYTHON_NAIVE_LIMIT:
            t_py, naive_py = median_time(lambda: kernels.python_kernels.naive_float_sum(n), reps)
            rows.append(BenchRow(n, "naive-float[python]", t_py, naive_py, naive_py == naive))
        t_q, q = median_time(lambda: quadratic_float(n, gamma_f), reps)
        rows.append(BenchRow(n, "quadratic-float", t_q, q, agrees(n, naive, q)))
        t_c, res = median_time(lambda: approx_quadratic(n, gamma, budget), reps)
        mid = float(res.value.mid)
        rows.append(BenchRow(n, "quadratic-certified", t_c, mid, agrees(n, naive, mid)))
    return rows


def render_bench(rows: list[BenchRow]) -> str:
    lines = ["n\tmethod\tmedian_s\tvalue\tagrees"]
    for r in rows:
        lines.append(f"{r.n}\t{r.method}\t{r.median_s:.3e}\t{r.value!r}\t{'yes' if r.agrees else 'no'}")
    by_n: dict[int, dict[str, float]] = {}
    for r in rows:
        by_n.setdefault(r.n, {})[r.method] = r.median_s
    for n, times in by_n.items():
        naive = times[f"naive-float[{kernels.BACKEND}]"]
        q = times["quadratic-float"]
        lines.append(f"speedup n={n}: naive-float[{kernels.BACKEND}] / quadratic-float "
                     f"time ratio {naive / q:.1f}")
    return "\n".join(lines) + "\n"
