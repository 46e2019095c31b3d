"""Micro-DE engine: initialization, generation loop, termination, trajectory."""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np
from joblib import Parallel, delayed

from ..constants import MIN_POPULATION_SIZE
from ..diversity.metrics import centroid_distance, pairwise_distance
from ..exceptions import EvaluationError, InvalidArgumentError, InvalidConfigurationError
from ..operators.crossover import crossover
from ..operators.mutation import MutationConfig, mutant
from .types import (
    Bounds,
    HistoryEntry,
    Individual,
    Population,
    RunConfig,
    RunRecord,
    TerminationReason,
)

logger = logging.getLogger(__name__)

Objective = Callable[[np.ndarray], float]


@dataclass
class NFCCounter:
    """Number of objective calls charged so far."""

    count: int = 0

    def charge(self, calls: int) -> None:
        self.count += calls


class SerialEvaluator:
    """Evaluate positions one after another in the calling thread."""

    def __call__(self, objective: Objective, positions: Sequence[np.ndarray]) -> list:
        return [objective(position) for position in positions]


class ThreadedEvaluator:
    """Evaluate the N_P positions of a generation on a thread pool.

    All random draws of the generation are made before this is called, so the
    results match SerialEvaluator exactly.
    """

    def __init__(self, n_jobs: int = -1):
        self.n_jobs = n_jobs

    def __call__(self, objective: Objective, positions: Sequence[np.ndarray]) -> list:
        return Parallel(n_jobs=self.n_jobs, prefer="threads")(
            delayed(objective)(position) for position in positions
        )


def _evaluate(
    objective: Objective,
    positions: Sequence[np.ndarray],
    counter: NFCCounter,
    evaluator: Callable | None,
) -> list[float]:
    evaluator = evaluator or SerialEvaluator()
    values = evaluator(objective, positions)
    counter.charge(len(positions))

    checked = []
    for position, value in zip(positions, values, strict=True):
        value = float(value)
        if not np.isfinite(value):
            raise EvaluationError(
                f"Objective returned non-finite value {value} at {position.tolist()}",
                position=position,
            )
        checked.append(value)
    return checked


def initialize_population(
    bounds: Bounds, n_p: int, rng: np.random.Generator
) -> Population:
    """Uniform random population inside ``bounds``; fitness left unevaluated."""
    if n_p < MIN_POPULATION_SIZE:
        raise InvalidConfigurationError(
            f"Population size must be at least {MIN_POPULATION_SIZE}, got {n_p}"
        )
    span = bounds.upper - bounds.lower
    positions = bounds.lower + rng.random((n_p, bounds.dimension)) * span
    return Population([Individual(row.copy()) for row in positions], generation=0)


def evaluate_population(
    population: Population,
    objective: Objective,
    counter: NFCCounter,
    evaluator: Callable | None = None,
) -> Population:
    """Fill in every member's fitness, charging one call per member."""
    positions = [member.position for member in population.members]
    values = _evaluate(objective, positions, counter, evaluator)
    members = [
        Individual(member.position, value)
        for member, value in zip(population.members, values, strict=True)
    ]
    return Population(members, generation=population.generation)


def repair_bounds(
    position: np.ndarray, bounds: Bounds, rng: np.random.Generator
) -> np.ndarray:
    """Resample every out-of-bounds coordinate uniformly inside its range.

    In-bounds coordinates pass through untouched and no draws are consumed when
    the whole vector is feasible.
    """
    position = np.asarray(position, dtype=float)
    if position.shape != bounds.lower.shape:
        raise InvalidArgumentError(
            f"Position of length {position.size} does not match "
            f"bounds of dimension {bounds.dimension}"
        )
    outside = (position < bounds.lower) | (position > bounds.upper)
    if not outside.any():
        return position.copy()
    repaired = position.copy()
    repaired[outside] = rng.uniform(bounds.lower[outside], bounds.upper[outside])
    return repaired


def step_generation(
    population: Population,
    config: MutationConfig,
    cr: float,
    objective: Objective,
    rng: np.random.Generator,
    nfc_counter: NFCCounter,
    bounds: Bounds | None = None,
    evaluator: Callable | None = None,
) -> Population:
    """Advance one generation with synchronous replacement.

    Every trial vector is built from the generation-g population before any
    survivor is chosen. Per target the draws are: donors, factors, crossover,
    then bound repair. A trial replaces its parent when f(U) <= f(X).
    """
    if not population.evaluated:
        raise InvalidArgumentError("step_generation needs an evaluated population")
    if not 0.0 <= cr <= 1.0:
        raise InvalidArgumentError(f"Crossover rate must lie in [0, 1], got {cr}")

    positions = population.positions
    fitness = population.fitness

    trials = []
    for target in range(population.size):
        donor = mutant(config, positions, fitness, target, rng)
        trial = crossover(positions[target], donor, cr, rng)
        if bounds is not None:
            trial = repair_bounds(trial, bounds, rng)
        trials.append(trial)

    trial_fitness = _evaluate(objective, trials, nfc_counter, evaluator)

    survivors = []
    for parent, trial, value in zip(
        population.members, trials, trial_fitness, strict=True
    ):
        if value <= parent.fitness:
            survivors.append(Individual(trial, value))
        else:
            survivors.append(parent)
    return Population(survivors, generation=population.generation + 1)


def _history_entry(
    population: Population, nfc: int, best_so_far: float, record_diversity: bool
) -> HistoryEntry:
    if record_diversity:
        c_d = centroid_distance(population)
        p_d = pairwise_distance(population)
    else:
        c_d = p_d = float("nan")
    return HistoryEntry(
        nfc=nfc,
        best_value_so_far=best_so_far,
        centroid_diversity=c_d,
        pairwise_diversity=p_d,
    )


def run(
    config: RunConfig, objective: Objective, evaluator: Callable | None = None
) -> RunRecord:
    """Run one micro-DE optimization until the error target or the budget is hit.

    The initial evaluation pass is charged to NFC. A new generation starts only
    when all of its N_P evaluations fit in the remaining budget, so the final NFC
    never exceeds NFC_Max.
    """
    config.validate()
    if config.bounds.dimension < 1:
        raise InvalidConfigurationError("Problem dimension must be at least 1")

    rng = np.random.default_rng(config.seed)
    counter = NFCCounter()
    termination = config.termination

    population = initialize_population(config.bounds, config.n_p, rng)
    population = evaluate_population(population, objective, counter, evaluator)

    history: list[HistoryEntry] = []
    best_so_far = float("inf")
    while True:
        best_so_far = min(best_so_far, float(np.min(population.fitness)))
        history.append(
            _history_entry(population, counter.count, best_so_far, config.record_diversity)
        )
        logger.debug(
            "generation=%d nfc=%d best=%.6e", population.generation, counter.count, best_so_far
        )

        if termination.error_reached(best_so_far):
            reason = TerminationReason.ERROR_REACHED
            break
        if counter.count + config.n_p > termination.nfc_max:
            reason = TerminationReason.BUDGET_EXHAUSTED
            break

        population = step_generation(
            population,
            config.mutation,
            config.cr,
            objective,
            rng,
            counter,
            bounds=config.bounds,
            evaluator=evaluator,
        )

    final_best = population.best()
    return RunRecord(
        history=history,
        final_best=Individual(final_best.position.copy(), final_best.fitness),
        terminated_by=reason,
        final_error=abs(final_best.fitness - termination.vtr),
        generations=population.generation,
        seed=config.seed,
    )


class MicroDifferentialEvolution:
    """
    Micro-DE optimizer.

    Thin object facade over ``run`` for library callers: configure once, then
    minimize any number of objectives with the same settings.
    """

    def __init__(self, config: RunConfig, evaluator: Callable | None = None):
        config.validate()
        self.config = config
        self.evaluator = evaluator

    def optimize(self, objective: Objective) -> RunRecord:
        """Minimize ``objective`` and return the run's record."""
        record = run(self.config, objective, evaluator=self.evaluator)
        logger.info(
            "Run finished: %s after %d evaluations, best error %.3e",
            record.terminated_by.value,
            record.nfc,
            record.final_error,
        )
        return record
