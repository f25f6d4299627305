"""Certified harmonic numbers: exact H_n, enclosures of Euler's constant,
and machine-checked bounds for the linear and quadratic approximations."""

from harmonic_cert.approximations import (
    ApproxResult,
    EmLevel,
    EmTruncation,
    Method,
    approx_euler_maclaurin,
    approx_naive_float,
    approx_quadratic,
    approx_young,
)
from harmonic_cert.geometry import (
    TrapezoidDecomposition,
    decompose,
    delta_partial_sum,
    delta_tail,
    sigma_series_coefficient,
    sigma_series_eval,
    sigma_tail,
)
from harmonic_cert.harmonic import (
    GammaEnclosure,
    HarmonicRecord,
    gamma_enclosure,
    gamma_n,
    harmonic_exact,
    harmonic_record,
    oresme_check,
    residual_epsilon,
    residual_theta,
)
from harmonic_cert.kernels import BACKEND
from harmonic_cert.numerics import (
    DomainError,
    PrecisionBudget,
    PrecisionError,
    RatInterval,
    iv_ln,
)
from harmonic_cert.series_bounds import (
    PowerLawTerm,
    TailBound,
    integral_test_tail,
    leibniz_bracket,
    sigma_tail_sandwich,
)

__version__ = "0.1.0"
