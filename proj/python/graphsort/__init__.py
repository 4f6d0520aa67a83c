"""Randomized sorting on weighted comparison graphs.

Thin Python layer over the C++ core: sequential sorters, matching samplers,
experiment runs and the analysis oracles.
"""

from ._core import (
    InvalidArgument,
    RunStats,
    coupon_expectation,
    coupon_tail,
    dimcut_matching,
    exact_structured_marginal,
    fit_scaling,
    gray_code,
    in_omega,
    inversions,
    is_gray_edge,
    lift,
    misplaced_counts,
    pair_probability,
    recurrence_bound_check,
    run_experiment,
    run_sequential,
    sample_matching,
    structured_matching,
    threshold_projection,
    to_csv,
    total_weight,
    verify_qalpha_exact,
    verify_qalpha_montecarlo,
)

__all__ = [
    "InvalidArgument",
    "RunStats",
    "coupon_expectation",
    "coupon_tail",
    "dimcut_matching",
    "exact_structured_marginal",
    "fit_scaling",
    "gray_code",
    "in_omega",
    "inversions",
    "is_gray_edge",
    "lift",
    "misplaced_counts",
    "pair_probability",
    "recurrence_bound_check",
    "run_experiment",
    "run_sequential",
    "sample_matching",
    "structured_matching",
    "threshold_projection",
    "to_csv",
    "total_weight",
    "verify_qalpha_exact",
    "verify_qalpha_montecarlo",
]

__version__ = "0.1.0"
