"""Tests for chi-square goodness of fit."""

import math

import numpy as np
import pytest
from scipy import special

from graphgen.errors import DomainError, ShapeError
from graphgen.stats import chi_square, chi_square_binomial, pool_bins, upper_regularized_gamma


def _series_upper_gamma(a, x, terms=1_000_000):
    k = np.arange(terms, dtype=np.float64)
    log_terms = k * math.log(x) - (special.gammaln(a + k + 1.0) - special.gammaln(a + 1.0))
    log_prefactor = a * math.log(x) - x - special.gammaln(a + 1.0)
    lower = math.fsum(np.exp(log_prefactor + log_terms).tolist())
    return 1.0 - lower


class TestChiSquare:
    """Tests for chi_square."""

    def test_dice(self, dice_observed, dice_expected):
        """Test the fair-die fixture: statistic 4/3 on 5 dof, p ~ 0.931."""
        result = chi_square(dice_observed, dice_expected)
        assert result.statistic == pytest.approx(4 / 3)
        assert result.dof == 5
        assert result.p_value == pytest.approx(0.931, abs=0.001)
        assert result.passes()

    def test_two_cells(self):
        """Test observed (10, 0) against (5, 5): statistic 10 on 1 dof."""
        result = chi_square([10, 0], [5, 5])
        assert result.statistic == 10.0
        assert result.dof == 1
        assert result.p_value == pytest.approx(upper_regularized_gamma(0.5, 5.0))
        assert result.p_value == pytest.approx(math.erfc(math.sqrt(5.0)))

    def test_perfect_fit(self):
        """Test that matching counts give statistic 0 and p = 1."""
        result = chi_square([4, 6], [4, 6])
        assert result.statistic == 0.0
        assert result.p_value == pytest.approx(1.0)

    def test_rejects_length_mismatch(self):
        """Test that unequal lengths raise ShapeError."""
        with pytest.raises(ShapeError):
            chi_square([1, 2, 3], [1, 2])

    def test_rejects_single_category(self):
        """Test that one category raises ShapeError."""
        with pytest.raises(ShapeError):
            chi_square([3], [3])

    def test_rejects_zero_expected(self):
        """Test that an expected count of 0 raises DomainError."""
        with pytest.raises(DomainError):
            chi_square([1, 2], [0, 3])


class TestUpperGamma:
    """Tests for the regularized upper incomplete gamma function."""

    def test_exponential_case(self):
        """Test Q(1, x) = exp(-x)."""
        assert upper_regularized_gamma(1.0, 2.0) == pytest.approx(math.exp(-2.0))

    def test_zero_x(self):
        """Test Q(a, 0) = 1."""
        assert upper_regularized_gamma(3.5, 0.0) == 1.0

    @pytest.mark.parametrize(
        "a,x",
        [
            (0.5, 0.1),
            (0.5, 2.0),
            (1.0, 1.0),
            (1.5, 3.0),
            (2.0, 0.5),
            (2.5, 5.0),
            (5.0, 4.0),
            (10.0, 12.0),
            (15.0, 7.5),
            (25.0, 30.0),
        ],
    )
    def test_matches_series(self, a, x):
        """Test against 1 - P(a, x) summed over 10^6 power-series terms."""
        assert upper_regularized_gamma(a, x) == pytest.approx(_series_upper_gamma(a, x), abs=1e-8)


    def test_rejects_bad_arguments(self):
        """Test that a <= 0 raises DomainError."""
        with pytest.raises(DomainError):
            upper_regularized_gamma(0.0, 1.0)


class TestBinomialFit:
    """Tests for pooling and the binomial edge-count test."""

    def test_pool_bins(self):
        """Test merging small bins left to right."""
        obs, exp = pool_bins(np.array([1.0, 2.0, 3.0, 10.0]), np.array([1.0, 2.0, 3.0, 10.0]))
        assert obs.tolist() == [6.0, 10.0]
        assert exp.tolist() == [6.0, 10.0]

    def test_pool_tail_joins_last_bin(self):
        """Test that a short tail is folded into the previous bin."""
        obs, exp = pool_bins(np.array([9.0, 1.0]), np.array([10.0, 1.0]))
        assert obs.tolist() == [10.0]
        assert exp.tolist() == [11.0]

    def test_true_binomial_passes(self):
        """Test that genuine Binomial(64, 0.25) counts are accepted."""
        counts = np.random.default_rng(31).binomial(64, 0.25, size=5000)
        assert chi_square_binomial(counts, 64, 0.25).passes()

    def test_wrong_p_fails(self):
        """Test that Binomial(64, 0.3) counts are rejected for p = 0.25."""
        counts = np.random.default_rng(32).binomial(64, 0.3, size=5000)
        assert not chi_square_binomial(counts, 64, 0.25).passes()

    def test_rejects_counts_above_trials(self):
        """Test that counts outside [0, trials] raise DomainError."""
        with pytest.raises(DomainError):
            chi_square_binomial([3, 70], 64, 0.25)
