"""
Statistical checks for graphgen.

Chi-square goodness of fit, coupon-collector expectations and empirical
frequency estimation.
"""

from graphgen.stats.chisquare import (
    ChiSquareResult,
    chi_square,
    chi_square_binomial,
    pool_bins,
    upper_regularized_gamma,
)
from graphgen.stats.coupon import (
    expected_ball_drop_ratio,
    expected_ball_drops_approx,
    expected_ball_drops_exact,
    harmonic_number,
)
from graphgen.stats.frequency import (
    DEFAULT_SIGMAS,
    FrequencyMatrix,
    Sampler,
    empirical_frequency,
    sigma_bound,
)

__all__ = [
    # Chi-square
    "ChiSquareResult",
    "chi_square",
    "chi_square_binomial",
    "pool_bins",
    "upper_regularized_gamma",
    # Coupon collector
    "expected_ball_drop_ratio",
    "expected_ball_drops_exact",
    "expected_ball_drops_approx",
    "harmonic_number",
    # Frequencies
    "DEFAULT_SIGMAS",
    "FrequencyMatrix",
    "Sampler",
    "empirical_frequency",
    "sigma_bound",
]
