"""Two-sided Wilcoxon rank-sum (Mann-Whitney) test for minimization results.

Ties get mid-ranks. Small samples use the exact permutation distribution of
the rank sum (ties included); larger ones use the normal approximation with
tie-corrected variance and continuity correction.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.stats import norm, rankdata

from ..constants import (
    DEFAULT_ALPHA,
    METHOD_EXACT,
    METHOD_NORMAL,
    MIN_SAMPLE_SIZE,
    NORMAL_APPROXIMATION_MIN_SIZE,
    OUTCOME_BETTER,
    OUTCOME_EQUAL,
    OUTCOME_SYMBOLS,
    OUTCOME_WORSE,
)
from ..exceptions import InvalidArgumentError


class Outcome(str, Enum):
    """Verdict of sample a against sample b (lower is better)."""

    BETTER = OUTCOME_BETTER
    EQUAL = OUTCOME_EQUAL
    WORSE = OUTCOME_WORSE

    @property
    def symbol(self) -> str:
        return OUTCOME_SYMBOLS[self.value]

    def swapped(self) -> "Outcome":
        if self is Outcome.BETTER:
            return Outcome.WORSE
        if self is Outcome.WORSE:
            return Outcome.BETTER
        return self


@dataclass(frozen=True)
class RankSumResult:
    statistic: float  # U of sample a
    p_value: float
    method: str
    a_lower: bool  # sample a sits below the null expectation


def _validate(sample_a, sample_b) -> tuple[np.ndarray, np.ndarray]:
    a = np.asarray(sample_a, dtype=float).reshape(-1)
    b = np.asarray(sample_b, dtype=float).reshape(-1)
    if a.size < MIN_SAMPLE_SIZE or b.size < MIN_SAMPLE_SIZE:
        raise InvalidArgumentError(
            f"Both samples need at least {MIN_SAMPLE_SIZE} values, got {a.size} and {b.size}"
        )
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise InvalidArgumentError("Samples must contain only finite values")
    return a, b


def use_exact(n_a: int, n_b: int) -> bool:
    """Whether the exact distribution is used for these sample sizes."""
    return min(n_a, n_b) < NORMAL_APPROXIMATION_MIN_SIZE


def exact_p_value(sample_a, sample_b) -> float:
    """Two-sided exact p-value of the rank sum of ``sample_a``.

    Counts every assignment of the pooled mid-ranks to group a whose rank sum
    lies at least as far from its mean as the observed one. Ranks are doubled
    so that mid-ranks stay integral.
    """
    a, b = _validate(sample_a, sample_b)
    n_a = a.size
    n = n_a + b.size
    doubled = np.rint(2.0 * rankdata(np.concatenate([a, b]))).astype(np.int64)
    total = int(doubled.sum())

    # counts[k, s]: number of k-subsets whose doubled rank sum is s
    counts = np.zeros((n_a + 1, total + 1))
    counts[0, 0] = 1.0
    for rank in doubled:
        counts[1:, rank:] += counts[:-1, : total + 1 - rank]

    distribution = counts[n_a]
    observed = int(doubled[:n_a].sum())
    centre = n_a * (n + 1)
    sums = np.arange(total + 1)
    extreme = np.abs(sums - centre) >= abs(observed - centre)
    return float(min(1.0, distribution[extreme].sum() / distribution.sum()))


def normal_p_value(sample_a, sample_b) -> float:
    """Two-sided p-value from the tie-corrected, continuity-corrected normal approximation."""
    a, b = _validate(sample_a, sample_b)
    n_a, n_b = a.size, b.size
    n = n_a + n_b
    ranks = rankdata(np.concatenate([a, b]))
    u_a = ranks[:n_a].sum() - n_a * (n_a + 1) / 2.0
    mean = n_a * n_b / 2.0

    _, ties = np.unique(ranks, return_counts=True)
    tie_term = float((ties**3 - ties).sum()) / (n * (n - 1))
    variance = n_a * n_b / 12.0 * ((n + 1) - tie_term)
    if variance <= 0:
        return 1.0
    z = max(abs(u_a - mean) - 0.5, 0.0) / np.sqrt(variance)
    return float(min(1.0, 2.0 * norm.sf(z)))


def rank_sum_p_value(sample_a, sample_b) -> RankSumResult:
    """U statistic of ``sample_a``, two-sided p-value and the method used."""
    a, b = _validate(sample_a, sample_b)
    n_a, n_b = a.size, b.size
    ranks = rankdata(np.concatenate([a, b]))
    u_a = float(ranks[:n_a].sum() - n_a * (n_a + 1) / 2.0)
    a_lower = u_a < n_a * n_b / 2.0

    if np.all(ranks == ranks[0]):
        method = METHOD_EXACT if use_exact(n_a, n_b) else METHOD_NORMAL
        return RankSumResult(statistic=u_a, p_value=1.0, method=method, a_lower=False)

    if use_exact(n_a, n_b):
        return RankSumResult(u_a, exact_p_value(a, b), METHOD_EXACT, a_lower)
    return RankSumResult(u_a, normal_p_value(a, b), METHOD_NORMAL, a_lower)


def verdict(result: RankSumResult, alpha: float) -> Outcome:
    if result.p_value < alpha:
        return Outcome.BETTER if result.a_lower else Outcome.WORSE
    return Outcome.EQUAL


def rank_sum_test(sample_a, sample_b, alpha: float = DEFAULT_ALPHA) -> Outcome:
    """Better when ``sample_a`` is significantly lower than ``sample_b``, Worse when higher."""
    if not 0.0 < alpha <= 0.5:
        raise InvalidArgumentError(f"alpha must lie in (0, 0.5], got {alpha}")
    return verdict(rank_sum_p_value(sample_a, sample_b), alpha)
