"""Arbitrary-order central-difference stencils for the Riesz fractional derivative."""

from ._core import (
    ConvergenceError,
    InstabilityError,
    ValidationError,
    apply_operator,
    build_filter,
    build_stencil,
    cosine_riesz_exact,
    eigen_bound,
    filter_response,
    gamma,
    hyp1f2_regularized,
    poly_riesz_exact,
    positivity_check,
    relative_response,
    run_cosine_experiment,
    run_poly_experiment,
    spectral_rate,
)

__all__ = [
    "ConvergenceError",
    "InstabilityError",
    "ValidationError",
    "apply_operator",
    "build_filter",
    "build_stencil",
    "cosine_riesz_exact",
    "eigen_bound",
    "filter_response",
    "gamma",
    "hyp1f2_regularized",
    "poly_riesz_exact",
    "positivity_check",
    "relative_response",
    "run_cosine_experiment",
    "run_poly_experiment",
    "spectral_rate",
]
