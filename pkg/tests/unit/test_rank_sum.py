"""Unit tests for the rank-sum test."""

import itertools
import math

import numpy as np
import pytest
from scipy.stats import rankdata

from src.micro_de.exceptions import InvalidArgumentError
from src.micro_de.stats.rank_sum import (
    Outcome,
    exact_p_value,
    normal_p_value,
    rank_sum_p_value,
    rank_sum_test,
    use_exact,
)


def enumerated_p_value(a, b):
    """Two-sided p-value by listing every assignment of the pooled ranks."""
    ranks = rankdata(np.concatenate([a, b]))
    n_a = len(a)
    observed = ranks[:n_a].sum()
    centre = n_a * (len(ranks) + 1) / 2.0
    sums = [ranks[list(c)].sum() for c in itertools.combinations(range(len(ranks)), n_a)]
    extreme = [s for s in sums if abs(s - centre) >= abs(observed - centre) - 1e-9]
    return len(extreme) / len(sums)


class TestExactPath:
    """Test the exact permutation distribution."""

    def test_hand_example(self):
        """{1,2,3} vs {10,11,12} has exact p = 0.1."""
        assert exact_p_value([1, 2, 3], [10, 11, 12]) == pytest.approx(0.1)

    def test_hand_example_verdicts(self):
        """That example is Equal at 0.05 and Better at 0.2."""
        assert rank_sum_test([1, 2, 3], [10, 11, 12], alpha=0.05) is Outcome.EQUAL
        assert rank_sum_test([1, 2, 3], [10, 11, 12], alpha=0.2) is Outcome.BETTER

    def test_reverse_is_worse(self):
        """Swapping the samples turns Better into Worse."""
        assert rank_sum_test([10, 11, 12], [1, 2, 3], alpha=0.2) is Outcome.WORSE

    @pytest.mark.parametrize(
        "n_a,n_b", [(a, b) for a in range(2, 6) for b in range(2, 6)]
    )
    def test_matches_enumeration_up_to_five_by_five(self, n_a, n_b):
        """Exact p-values equal full enumeration for all sizes up to 5 x 5."""
        rng = np.random.default_rng(100 * n_a + n_b)
        for _ in range(5):
            a = rng.integers(0, 6, size=n_a).astype(float)
            b = rng.integers(0, 6, size=n_b).astype(float)
            if np.all(np.concatenate([a, b]) == a[0]):
                continue
            assert exact_p_value(a, b) == pytest.approx(enumerated_p_value(a, b), abs=1e-12)


class TestNormalPath:
    """Test the normal approximation."""

    def test_large_separation_is_better(self):
        """30 draws of N(0,1) against N(5,1) is Better."""
        rng = np.random.default_rng(0)
        a = rng.normal(0, 1, 30)
        b = rng.normal(5, 1, 30)
        result = rank_sum_p_value(a, b)
        assert result.method == "normal"
        assert rank_sum_test(a, b) is Outcome.BETTER

    def test_agrees_with_exact_on_small_samples(self):
        """Verdicts agree with the exact path on nearly all of 1,000 small random pairs.

        The two p-values straddle alpha for a small share of samples near the
        decision boundary, so agreement is checked as a rate.
        """
        rng = np.random.default_rng(7)
        agree = 0
        for _ in range(1000):
            n_a, n_b = (int(n) for n in rng.integers(3, 10, size=2))
            shift = rng.uniform(0, 2)
            a = rng.normal(0, 1, n_a)
            b = rng.normal(shift, 1, n_b)
            exact = exact_p_value(a, b) < 0.05
            normal = normal_p_value(a, b) < 0.05
            agree += exact == normal
        assert agree / 1000 >= 0.97

    def test_continuity_corrected_p_is_at_most_one(self):
        """Identical-ish samples never produce p > 1."""
        assert normal_p_value([1.0, 2.0, 3.0], [1.0, 2.0, 3.0]) == 1.0


class TestRankSumTest:
    """Test verdicts and validation."""

    def test_identical_samples_equal(self):
        """Identical samples are Equal."""
        a = [0.1, 0.5, 0.3, 0.9]
        assert rank_sum_test(a, list(a)) is Outcome.EQUAL

    def test_all_tied_is_equal(self):
        """Degenerate samples with every value tied are Equal with p = 1."""
        result = rank_sum_p_value([0.0] * 30, [0.0] * 30)
        assert result.p_value == 1.0
        assert rank_sum_test([0.0] * 30, [0.0] * 30) is Outcome.EQUAL

    def test_method_selection(self):
        """Exact for small samples, normal from 10 per side."""
        assert use_exact(5, 5)
        assert use_exact(9, 30)
        assert not use_exact(10, 10)
        assert rank_sum_p_value(range(3), range(3, 6)).method == "exact"

    @pytest.mark.parametrize("swap", [False, True])
    def test_unequal_sizes_stay_exact(self, swap):
        """9 against 30 (a cell that lost runs) uses the exact distribution."""
        small, large = np.arange(9.0), np.arange(9.0, 39.0)
        a, b = (large, small) if swap else (small, large)
        result = rank_sum_p_value(a, b)
        assert result.method == "exact"
        # only the two fully separated arrangements are as extreme
        assert result.p_value == pytest.approx(2.0 / math.comb(39, 9), rel=1e-9)

    def test_statistic_is_u_of_first_sample(self):
        """U_a counts pairs where a exceeds b."""
        assert rank_sum_p_value([1, 2], [3, 4]).statistic == 0.0
        assert rank_sum_p_value([3, 4], [1, 2]).statistic == 4.0

    @pytest.mark.parametrize("alpha", [0.0, 0.6])
    def test_alpha_out_of_range(self, alpha):
        """alpha must lie in (0, 0.5]."""
        with pytest.raises(InvalidArgumentError):
            rank_sum_test([1, 2], [3, 4], alpha=alpha)

    def test_too_small_sample(self):
        """Each sample needs at least two values."""
        with pytest.raises(InvalidArgumentError):
            rank_sum_test([1.0], [2.0, 3.0])

    def test_non_finite_sample(self):
        """NaN values are rejected."""
        with pytest.raises(InvalidArgumentError):
            rank_sum_test([1.0, np.nan], [2.0, 3.0])

    def test_outcome_symbols_and_swap(self):
        """Outcomes map to symbols and swap antisymmetrically."""
        assert Outcome.BETTER.symbol == "+"
        assert Outcome.BETTER.swapped() is Outcome.WORSE
        assert Outcome.EQUAL.swapped() is Outcome.EQUAL
