"""Command line: ``harmonic-cert {verify,table,gamma,bench}``.

Exit codes: 0 pass, 1 verification failure, 2 usage error,
3 an enclosure too wide to decide (precision).
"""
from __future__ import annotations

import argparse
import math
import sys

import gmpy2

from harmonic_cert import kernels
from harmonic_cert.bench import render_bench, run_bench
from harmonic_cert.harmonic import default_gamma_source, gamma_enclosure
from harmonic_cert.numerics import (
    DEFAULT_BUDGET,
    PrecisionBudget,
    agreed_decimal,
    directed_decimal,
)
from harmonic_cert.table import BoundViolation, build_rows, parse_methods, render_rows
from harmonic_cert.verify import (
    EXIT_FAIL,
    EXIT_PASS,
    EXIT_PRECISION,
    EXIT_USAGE,
    SUITES,
    run_suite,
)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {value}")
    return value


def int_list(text: str) -> list[int]:
    return [positive_int(part) for part in text.split(",") if part.strip()]


def _budget(args) -> PrecisionBudget:
    return PrecisionBudget(args.budget) if args.budget else DEFAULT_BUDGET


def _emit(text: str, out: str | None) -> None:
    sys.stdout.write(text)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_verify(args) -> int:
    if args.max_n < 2:
        print("verify: --max-n must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    report = run_suite(args.suite, args.max_n, _budget(args), args.gamma_source)
    _emit(report.render(), args.out)
    if report.exit_code == EXIT_PRECISION:
        offending = sorted({u.n for u in report.undecided})
        print(f"verify: enclosures too wide to decide at n={offending[:10]}; "
              "raise --budget or --gamma-source", file=sys.stderr)
    return report.exit_code


def table_gamma_source(n_max: int) -> int:
    # gamma width 1/(4m^3) must sit below the 15 default printed digits
    return max(10 ** 6, default_gamma_source(n_max))


def cmd_table(args) -> int:
    try:
        methods = parse_methods(args.methods)
    except ValueError as exc:
        print(f"table: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.to < args.start:
        print("table: --to must be >= --from", file=sys.stderr)
        return EXIT_USAGE
    budget = _budget(args)
    gamma = gamma_enclosure(args.gamma_source or table_gamma_source(args.to), budget)
    try:
        rows = build_rows(args.start, args.to, args.step, methods, gamma, args.digits, budget)
    except BoundViolation as exc:
        print(f"table: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(render_rows(rows, args.format), args.out)
    return EXIT_PASS


def gamma_budget(n: int) -> PrecisionBudget:
    """Enough atanh terms that the log enclosure sits far below 1/(4n^3)."""
    # each term gains log2(9) bits; aim 60 bits below 3 log2(n)
    needed = math.ceil((3 * math.log2(n) + 60) / math.log2(9))
    return PrecisionBudget(max(DEFAULT_BUDGET.terms, needed))


def sufficient_n(digits: int) -> int:
    """Smallest n with 1/(4n^3) below 10**-(digits+1)."""
    root, _ = gmpy2.iroot(gmpy2.mpz(10) ** (digits + 1) // 4, 3)
    return int(root) + 1


def cmd_gamma(args) -> int:
    budget = PrecisionBudget(args.budget) if args.budget else gamma_budget(args.n)
    enc = gamma_enclosure(args.n, budget)
    shown = max(30, (args.digits or 0) + 5)
    agreed, places = agreed_decimal(enc.interval, shown)
    text = "\n".join([
        f"n: {enc.derived_at_n}",
        f"lo: {directed_decimal(enc.lo, shown, up=False)}",
        f"hi: {directed_decimal(enc.hi, shown, up=True)}",
        f"agreed_digits: {max(places, 0)}",
        f"agreed: {agreed if agreed is not None else ''}",
    ]) + "\n"
    _emit(text, args.out)
    if args.digits and places < args.digits:
        print(f"gamma: only {max(places, 0)} digits certified at n={args.n}; "
              f"try --n {max(sufficient_n(args.digits), args.n + 1)}", file=sys.stderr)
        return EXIT_PRECISION
    return EXIT_PASS


def cmd_bench(args) -> int:
    n_list = [n for group in args.n for n in group] or [10 ** 6]
    rows = run_bench(n_list, args.reps, _budget(args))
    _emit(f"backend: {kernels.BACKEND}\n" + render_bench(rows), args.out)
    return EXIT_PASS if all(r.agrees for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonic-cert",
        description="Certified harmonic-number approximations with rational interval arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=positive_int, default=None,
                        help="atanh series terms for logarithm enclosures (default 40)")
    common.add_argument("--out", metavar="PATH", default=None,
                        help="also write the output to PATH")

    v = sub.add_parser("verify", parents=[common], help="certify the proof's inequalities")
    v.add_argument("--suite", choices=("all",) + SUITES, default="all")
    v.add_argument("--max-n", type=positive_int, default=1000)
    v.add_argument("--gamma-source", type=positive_int, default=None,
                   help="n at which gamma is derived (default max(10^4, 10 max_n))")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", parents=[common], help="approximation comparison table")
    t.add_argument("--from", dest="start", type=positive_int, default=1)
    t.add_argument("--to", type=positive_int, default=10)
    t.add_argument("--step", type=positive_int, default=1)
    t.add_argument("--methods", default="young,quadratic",
                   help="comma list: exact, naive, young, quadratic, em:log|half|quad|quartic|sextic")
    t.add_argument("--digits", type=positive_int, default=15)
    t.add_argument("--format", choices=("csv", "tsv"), default="csv")
    t.add_argument("--gamma-source", type=positive_int, default=None)
    t.set_defaults(func=cmd_table)

    g = sub.add_parser("gamma", parents=[common], help="enclose Euler's constant")
    g.add_argument("--n", type=positive_int, default=10 ** 4)
    g.add_argument("--digits", type=positive_int, default=None,
                   help="fail with exit 3 unless this many decimals are certified")
    g.set_defaults(func=cmd_gamma)

    b = sub.add_parser("bench", parents=[common], help="time summation against closed forms")
    b.add_argument("--n", type=int_list, action="append", default=[],
                   help="problem size(s); repeatable or comma separated")
    b.add_argument("--reps", type=positive_int, default=5)
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
