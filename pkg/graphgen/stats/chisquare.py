"""
Pearson chi-square goodness of fit.
"""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy import special, stats

from graphgen.errors import DomainError, ShapeError

# Bins with a smaller expected count are merged into their neighbours
MIN_EXPECTED = 5.0


@dataclass(frozen=True)
class ChiSquareResult:
    """Test statistic, degrees of freedom and upper-tail p-value."""

    statistic: float
    dof: int
    p_value: float

    def passes(self, alpha: float = 0.001) -> bool:
        """Check if the fit is not rejected at level alpha."""
        return self.p_value > alpha


def upper_regularized_gamma(a: float, x: float) -> float:
    """
    Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).

    scipy evaluates it by power series below x = a + 1 and by continued
    fraction above.
    """
    if a <= 0.0 or x < 0.0:
        raise DomainError(f"Q(a, x) needs a > 0 and x >= 0, got a={a}, x={x}")
    return float(special.gammaincc(a, x))


def chi_square(
    observed: Sequence[float] | np.ndarray, expected: Sequence[float] | np.ndarray
) -> ChiSquareResult:
    """
    Pearson's cumulative statistic sum((O - E)^2 / E).

    Args:
        observed: Observed counts per category
        expected: Expected counts per category, all positive

    Returns:
        Statistic, dof = categories - 1, and p = Q(dof / 2, statistic / 2)

    Raises:
        ShapeError: If the lengths differ or there are fewer than two categories
        DomainError: If any expected count is not positive

    Example:
        chi_square([30, 32, 33, 31, 29, 25], [30] * 6)  # statistic 4/3, p ~ 0.931
    """
    obs = np.asarray(observed, dtype=np.float64)
    exp = np.asarray(expected, dtype=np.float64)
    if obs.shape != exp.shape or obs.ndim != 1:
        raise ShapeError(f"Observed {obs.shape} and expected {exp.shape} must be equal 1-D")
    if obs.size < 2:
        raise ShapeError("Chi-square needs at least two categories")
    if np.any(exp <= 0.0):
        raise DomainError("Expected counts must be positive")

    statistic = float(np.sum((obs - exp) ** 2 / exp))
    dof = int(obs.size - 1)
    return ChiSquareResult(statistic, dof, upper_regularized_gamma(dof / 2.0, statistic / 2.0))


def pool_bins(observed: np.ndarray, expected: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Merge adjacent bins left to right until each expected count reaches MIN_EXPECTED."""
    pooled_obs: list[float] = []
    pooled_exp: list[float] = []
    acc_obs = acc_exp = 0.0
    for o, e in zip(observed.tolist(), expected.tolist()):
        acc_obs += o
        acc_exp += e
        if acc_exp >= MIN_EXPECTED:
            pooled_obs.append(acc_obs)
            pooled_exp.append(acc_exp)
            acc_obs = acc_exp = 0.0
    if acc_exp > 0.0 or acc_obs > 0.0:
        if pooled_exp:
            pooled_obs[-1] += acc_obs
            pooled_exp[-1] += acc_exp
        else:
            pooled_obs.append(acc_obs)
            pooled_exp.append(acc_exp)
    return np.asarray(pooled_obs), np.asarray(pooled_exp)


def chi_square_binomial(
    counts: Sequence[int] | np.ndarray, trials: int, p: float
) -> ChiSquareResult:
    """
    Test observed per-sample edge counts against Binomial(trials, p).

    Args:
        counts: One edge count per sample
        trials: Number of cells
        p: Cell probability

    Example:
        chi_square_binomial(edge_counts, 64, 0.25)
    """
    values = np.asarray(counts, dtype=np.int64)
    if values.size == 0:
        raise DomainError("Need at least one sample")
    if values.min() < 0 or values.max() > trials:
        raise DomainError(f"Edge counts must lie in [0, {trials}]")

    observed = np.bincount(values, minlength=trials + 1).astype(np.float64)
    expected = values.size * stats.binom.pmf(np.arange(trials + 1), trials, p)
    obs, exp = pool_bins(observed, expected)
    return chi_square(obs, exp)
