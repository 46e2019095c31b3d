"""Rank-sum comparisons of final-error samples."""

from .comparison import ComparisonCounts, ComparisonReport, FunctionComparison, summarize
from .rank_sum import (
    Outcome,
    RankSumResult,
    exact_p_value,
    normal_p_value,
    rank_sum_p_value,
    rank_sum_test,
    use_exact,
    verdict,
)

__all__ = [
    "ComparisonCounts",
    "ComparisonReport",
    "FunctionComparison",
    "Outcome",
    "RankSumResult",
    "exact_p_value",
    "normal_p_value",
    "rank_sum_p_value",
    "rank_sum_test",
    "summarize",
    "use_exact",
    "verdict",
]
