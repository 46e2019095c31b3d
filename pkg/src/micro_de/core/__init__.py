"""Micro-DE engine and its domain types."""

from .engine import (
    MicroDifferentialEvolution,
    NFCCounter,
    SerialEvaluator,
    ThreadedEvaluator,
    evaluate_population,
    initialize_population,
    repair_bounds,
    run,
    step_generation,
)
from .types import (
    Bounds,
    HistoryEntry,
    Individual,
    Population,
    RunConfig,
    RunRecord,
    TerminationCriteria,
    TerminationReason,
)

__all__ = [
    "Bounds",
    "HistoryEntry",
    "Individual",
    "MicroDifferentialEvolution",
    "NFCCounter",
    "Population",
    "RunConfig",
    "RunRecord",
    "SerialEvaluator",
    "TerminationCriteria",
    "TerminationReason",
    "ThreadedEvaluator",
    "evaluate_population",
    "initialize_population",
    "repair_bounds",
    "run",
    "step_generation",
]
