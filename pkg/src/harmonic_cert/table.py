"""Long-format comparison tables of the approximation methods.

Every decimal written is a truncation of a certified enclosure, shortened
until both endpoints agree, so each printed digit is correct.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from gmpy2 import mpq

from harmonic_cert.approximations import (
    EM_LEVEL_NAMES,
    ApproxResult,
    Method,
    approx_quadratic,
    approx_young,
    em_result,
    naive_result,
)
from harmonic_cert.harmonic import harmonic_sequence
from harmonic_cert.numerics import (
    DEFAULT_BUDGET,
    BigRational,
    PrecisionBudget,
    RatInterval,
    directed_decimal,
    format_enclosure,
)

HEADER = ("n", "method", "value", "abs_error", "certified_bound", "within_bound")
METHOD_NAMES = ("exact", "naive", "young", "quadratic") + tuple(
    f"em:{name}" for name in EM_LEVEL_NAMES.values())
_EM_BY_NAME = {f"em:{name}": level for level, name in EM_LEVEL_NAMES.items()}


class BoundViolation(RuntimeError):
    """A certified method missed its own error bound; the table is not written."""


@dataclass(frozen=True)
class TableRow:
    n: int
    method: str
    value: str
    abs_error: str
    certified_bound: str
    within_bound: str

    def cells(self) -> tuple:
        return (self.n, self.method, self.value, self.abs_error,
                self.certified_bound, self.within_bound)


def parse_methods(spec: str) -> list[str]:
    methods = [m.strip() for m in spec.split(",") if m.strip()]
    unknown = [m for m in methods if m not in METHOD_NAMES]
    if unknown or not methods:
        raise ValueError(f"unknown method(s) {unknown or spec!r}; choose from {', '.join(METHOD_NAMES)}")
    return methods


def _result(method: str, n: int, gamma, budget: PrecisionBudget, h: BigRational) -> ApproxResult:
    if method == "exact":
        return ApproxResult(n, Method.EXACT, RatInterval.point(h), mpq(0), "exact")
    if method == "naive":
        return naive_result(n)
    if method == "young":
        return approx_young(n, gamma, budget)
    if method == "quadratic":
        return approx_quadratic(n, gamma, budget)
    return em_result(n, _EM_BY_NAME[method], gamma, budget)


def build_rows(start: int, stop: int, step: int, methods: list[str], gamma,
               digits: int = 15, budget: PrecisionBudget = DEFAULT_BUDGET) -> list[TableRow]:
    wanted = set(range(start, stop + 1, step))
    rows = []
    for n, h in harmonic_sequence(stop, start):
        if n not in wanted:
            continue
        for method in methods:
            res = _result(method, n, gamma, budget, h)
            err = res.abs_error(h)
            bound = res.certified_abs_error_bound
            if bound is None:
                bound_text = within = ""
            else:
                ok = res.within_bound(h)
                if not ok:
                    raise BoundViolation(
                        f"n={n} method={method}: |error| up to {err.hi} exceeds bound {bound}")
                bound_text = directed_decimal(bound, digits, up=True)
                within = "true"
            rows.append(TableRow(n, method, format_enclosure(res.value, digits),
                                 format_enclosure(err, digits), bound_text, within))
    return rows


def render_rows(rows: list[TableRow], fmt: str = "csv") -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter="," if fmt == "csv" else "\t", lineterminator="\n")
    writer.writerow(HEADER)
    for row in rows:
        writer.writerow(row.cells())
    return buf.getvalue()
