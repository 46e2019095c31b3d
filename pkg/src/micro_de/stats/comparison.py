"""Per-function rank-sum comparison of two algorithms and the +/=/- tally."""

import logging
from collections.abc import Mapping, Sequence

import numpy as np
from pydantic import BaseModel, Field, model_validator

from ..constants import DEFAULT_ALPHA
from ..exceptions import InvalidArgumentError
from .rank_sum import Outcome, rank_sum_p_value, verdict

logger = logging.getLogger(__name__)


class FunctionComparison(BaseModel):
    """Verdict of the reference against the opponent on one function."""

    function: str = Field(..., description="Benchmark function name")
    outcome: Outcome = Field(..., description="better / equal / worse for the reference")
    p_value: float = Field(..., description="Two-sided rank-sum p-value")
    method: str = Field(..., description="exact or normal")
    reference_median: float = Field(..., description="Median final error of the reference")
    opponent_median: float = Field(..., description="Median final error of the opponent")


class ComparisonCounts(BaseModel):
    plus: int = Field(0, ge=0, description="Functions where the reference is better")
    equal: int = Field(0, ge=0, description="Functions with no significant difference")
    minus: int = Field(0, ge=0, description="Functions where the reference is worse")


class ComparisonReport(BaseModel):
    """Rank-sum comparison of two algorithms over a set of functions."""

    reference: str = Field(..., description="Reference algorithm / cell family")
    opponent: str = Field(..., description="Opponent algorithm / cell family")
    alpha: float = Field(..., gt=0, le=0.5, description="Significance level")
    per_function: list[FunctionComparison] = Field(default_factory=list)
    counts: ComparisonCounts = Field(default_factory=ComparisonCounts)

    @model_validator(mode="after")
    def _counts_cover_functions(self):
        total = self.counts.plus + self.counts.equal + self.counts.minus
        if total != len(self.per_function):
            raise ValueError(
                f"Counts sum to {total} but {len(self.per_function)} functions were compared"
            )
        return self


def summarize(
    reference_results: Mapping[str, Sequence[float]],
    opponent_results: Mapping[str, Sequence[float]],
    alpha: float = DEFAULT_ALPHA,
    reference: str = "reference",
    opponent: str = "opponent",
) -> ComparisonReport:
    """Compare final errors function by function and tally the verdicts."""
    if not 0.0 < alpha <= 0.5:
        raise InvalidArgumentError(f"alpha must lie in (0, 0.5], got {alpha}")

    missing_in_opponent = sorted(set(reference_results) - set(opponent_results))
    missing_in_reference = sorted(set(opponent_results) - set(reference_results))
    if missing_in_opponent or missing_in_reference:
        raise InvalidArgumentError(
            "Function sets differ: "
            f"missing for {opponent}: {missing_in_opponent}, "
            f"missing for {reference}: {missing_in_reference}"
        )

    per_function = []
    counts = ComparisonCounts()
    for function in sorted(reference_results):
        ref = np.asarray(reference_results[function], dtype=float)
        opp = np.asarray(opponent_results[function], dtype=float)
        if ref.size != opp.size:
            logger.warning(
                "Run counts differ on %s: %d vs %d", function, ref.size, opp.size
            )
        result = rank_sum_p_value(ref, opp)
        outcome = verdict(result, alpha)
        if outcome is Outcome.BETTER:
            counts.plus += 1
        elif outcome is Outcome.WORSE:
            counts.minus += 1
        else:
            counts.equal += 1
        per_function.append(
            FunctionComparison(
                function=function,
                outcome=outcome,
                p_value=result.p_value,
                method=result.method,
                reference_median=float(np.median(ref)),
                opponent_median=float(np.median(opp)),
            )
        )

    report = ComparisonReport(
        reference=reference,
        opponent=opponent,
        alpha=alpha,
        per_function=per_function,
        counts=counts,
    )
    logger.info(
        "%s vs %s: +%d =%d -%d",
        reference,
        opponent,
        counts.plus,
        counts.equal,
        counts.minus,
    )
    return report
