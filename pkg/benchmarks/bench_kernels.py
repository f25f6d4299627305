"""Compiled vs pure-Python kernels: timing and bit-for-bit agreement.

    python benchmarks/bench_kernels.py --n 100000 1000000 --limbs 2 --reps 5
"""
from __future__ import annotations

import argparse
import statistics
import sys
import time

from harmonic_cert import kernels
from harmonic_cert._pykernels import harmonic_fixed_point as py_fixed
from harmonic_cert._pykernels import naive_float_sum as py_float


def median_time(fn, reps):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times), result


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[10 ** 5, 10 ** 6])
    parser.add_argument("--limbs", type=int, default=2)
    parser.add_argument("--reps", type=int, default=5)
    args = parser.parse_args(argv)

    if kernels.compiled_kernels is None:
        print("compiled extension not available; nothing to compare", file=sys.stderr)
        return 1
    ck = kernels.compiled_kernels
    print("kernel\tn\tcompiled_s\tpython_s\tratio\tidentical")
    mismatch = False
    for n in args.n:
        cases = (
            ("naive_float_sum", lambda: ck.naive_float_sum(n), lambda: py_float(n)),
            (f"harmonic_fixed_point[{args.limbs}]",
             lambda: ck.harmonic_fixed_point(n, args.limbs),
             lambda: py_fixed(n, args.limbs)),
        )
        for name, fast, slow in cases:
            tc, rc = median_time(fast, args.reps)
            tp, rp = median_time(slow, args.reps)
            same = rc == rp
            mismatch |= not same
            print(f"{name}\t{n}\t{tc:.3e}\t{tp:.3e}\t{tp / tc:.1f}\t{'yes' if same else 'no'}")
    return 1 if mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
