"""Domain types of a micro-DE run."""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..constants import (
    DEFAULT_CROSSOVER_RATE,
    DEFAULT_EVTR,
    MIN_POPULATION_SIZE,
    TERMINATED_BUDGET_EXHAUSTED,
    TERMINATED_ERROR_REACHED,
)
from ..exceptions import InvalidConfigurationError
from ..operators.mutation import MutationConfig


@dataclass(frozen=True, eq=False)
class Bounds:
    """Per-dimension box constraints."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float).reshape(-1)
        upper = np.asarray(self.upper, dtype=float).reshape(-1)
        if lower.size == 0 or lower.shape != upper.shape:
            raise InvalidConfigurationError(
                f"Bounds need matching non-empty vectors, got {lower.size} and {upper.size}"
            )
        if not np.all(lower < upper):
            bad = np.flatnonzero(~(lower < upper)).tolist()
            raise InvalidConfigurationError(
                f"Bounds must satisfy min < max in every dimension, violated at {bad}"
            )
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def uniform(cls, low: float, high: float, dimension: int) -> "Bounds":
        """The same [low, high] interval in every dimension."""
        return cls(np.full(dimension, low), np.full(dimension, high))

    @property
    def dimension(self) -> int:
        return self.lower.size

    def contains(self, position: np.ndarray) -> bool:
        return bool(np.all((position >= self.lower) & (position <= self.upper)))


@dataclass(eq=False)
class Individual:
    """A decision vector with its cached objective value."""

    position: np.ndarray
    fitness: float | None = None

    @property
    def evaluated(self) -> bool:
        return self.fitness is not None


@dataclass
class Population:
    """The N_P members of generation ``generation``."""

    members: list[Individual]
    generation: int = 0

    def __post_init__(self):
        if len(self.members) < MIN_POPULATION_SIZE:
            raise InvalidConfigurationError(
                f"Population needs at least {MIN_POPULATION_SIZE} members, "
                f"got {len(self.members)}"
            )
        dimensions = {member.position.size for member in self.members}
        if len(dimensions) != 1:
            raise InvalidConfigurationError(
                f"Population members disagree on dimension: {sorted(dimensions)}"
            )

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def dimension(self) -> int:
        return self.members[0].position.size

    @property
    def positions(self) -> np.ndarray:
        """(N_P, D) matrix of member positions."""
        return np.vstack([member.position for member in self.members])

    @property
    def fitness(self) -> np.ndarray:
        """Cached objective values; NaN marks an unevaluated member."""
        return np.array(
            [np.nan if m.fitness is None else m.fitness for m in self.members]
        )

    @property
    def evaluated(self) -> bool:
        return all(member.evaluated for member in self.members)

    def best(self) -> Individual:
        """Member with the lowest fitness (first one on ties)."""
        return self.members[int(np.argmin(self.fitness))]


@dataclass(frozen=True)
class TerminationCriteria:
    """Stop when |BFV - VTR| <= EVTR or the evaluation budget is spent."""

    vtr: float
    nfc_max: int
    evtr: float = DEFAULT_EVTR

    def __post_init__(self):
        if self.evtr < 0:
            raise InvalidConfigurationError(f"EVTR must be >= 0, got {self.evtr}")
        if self.nfc_max <= 0:
            raise InvalidConfigurationError(
                f"NFC_Max must be positive, got {self.nfc_max}"
            )

    def error_reached(self, best_value: float) -> bool:
        return abs(best_value - self.vtr) <= self.evtr


class TerminationReason(str, Enum):
    ERROR_REACHED = TERMINATED_ERROR_REACHED
    BUDGET_EXHAUSTED = TERMINATED_BUDGET_EXHAUSTED


@dataclass(frozen=True)
class HistoryEntry:
    """One per-generation sample of a run's trajectory."""

    nfc: int
    best_value_so_far: float
    centroid_diversity: float
    pairwise_diversity: float


@dataclass
class RunRecord:
    """Trajectory and outcome of a single run."""

    history: list[HistoryEntry]
    final_best: Individual
    terminated_by: TerminationReason
    final_error: float
    generations: int
    seed: int | None = None

    @property
    def nfc(self) -> int:
        return self.history[-1].nfc


@dataclass(frozen=True)
class RunConfig:
    """Everything a single run needs besides the objective."""

    bounds: Bounds
    n_p: int
    mutation: MutationConfig
    termination: TerminationCriteria
    cr: float = DEFAULT_CROSSOVER_RATE
    seed: int | None = None
    record_diversity: bool = True

    def validate(self) -> None:
        """Check the cross-field constraints a run relies on."""
        if self.n_p < MIN_POPULATION_SIZE:
            raise InvalidConfigurationError(
                f"Population size must be at least {MIN_POPULATION_SIZE}, got {self.n_p}"
            )
        self.mutation.scheme.check_population(self.n_p)
        if not 0.0 <= self.cr <= 1.0:
            raise InvalidConfigurationError(
                f"Crossover rate must lie in [0, 1], got {self.cr}"
            )
        if self.termination.nfc_max < self.n_p:
            raise InvalidConfigurationError(
                f"NFC_Max={self.termination.nfc_max} cannot cover one evaluation "
                f"pass of N_P={self.n_p}"
            )
