"""
Coupon-collector accounting for ball dropping.

Collecting m distinct cells out of N by uniform draws with replacement takes
N (H_N - H_(N-m)) draws on average, about N ln(N / (N - m)).
"""

import math

import numpy as np

from graphgen.errors import DomainError

# Below this p the closed form loses precision to the series
SERIES_CUTOFF = 1e-12


def expected_ball_drop_ratio(p: float) -> float:
    """
    Expected draws per distinct edge when ball dropping at density p.

    (1 / p) ln(1 / (1 - p)), which tends to 1 as p -> 0.

    Raises:
        DomainError: If p lies outside [0, 1)
    """
    if math.isnan(p) or p < 0.0 or p >= 1.0:
        raise DomainError(f"Ball-drop ratio needs 0 <= p < 1, got {p}")
    if p < SERIES_CUTOFF:
        return 1.0 + p / 2.0 + p * p / 3.0
    return -math.log1p(-p) / p


def harmonic_number(n: int) -> float:
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
    if n < 0:
        raise DomainError(f"Harmonic number needs n >= 0, got {n}")
    return math.fsum(1.0 / i for i in range(1, n + 1))


def expected_ball_drops_exact(cells: int, m: int) -> float:
    """
    Expected uniform draws to collect m distinct cells out of `cells`.

    Sums 1/i over i = cells - m + 1 .. cells directly, without the
    Euler-Mascheroni approximation.

    Raises:
        DomainError: If m is negative or exceeds cells
    """
    if m < 0 or m > cells:
        raise DomainError(f"Cannot collect {m} distinct cells out of {cells}")
    if m == 0:
        return 0.0
    terms = 1.0 / np.arange(cells - m + 1, cells + 1, dtype=np.float64)
    return float(cells * math.fsum(terms.tolist()))


def expected_ball_drops_approx(cells: int, m: int) -> float:
    """Log approximation cells * ln(cells / (cells - m)); infinite when m == cells."""
    if m < 0 or m > cells:
        raise DomainError(f"Cannot collect {m} distinct cells out of {cells}")
    if m == cells:
        return math.inf
    return -cells * math.log1p(-m / cells)
