"""Monte-Carlo simulations of how the factor mode shapes mutant and trial clouds.

Two experiments are provided:

- mutant clouds: V = origin + F * R for a fixed difference vector R, showing
  the geometry of each factor mode;
- trial diversity: a fixed random population in [0, 1]^D is pushed through
  DE/Rand/1 mutation (and optionally binomial crossover) many times, and the
  C_D / P_D of every generated trial set is averaged.
"""

import logging
from dataclasses import dataclass
from math import ceil
from pathlib import Path

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from ..constants import (
    DEFAULT_CROSSOVER_RATE,
    DEFAULT_MASTER_SEED,
    DIVERSITY_CSV_COLUMNS,
    POINT_CLOUD_ID_COLUMNS,
    PRESET_MUTANT_GEOMETRY,
    PRESET_TRIAL_DIVERSITY,
    SIMULATION_BASE_VECTOR,
    SIMULATION_BOX,
    SIMULATION_CHUNK_ELEMENTS,
    SIMULATION_CMF_VALUE,
    SIMULATION_FACTOR_RANGE,
    SIMULATION_MUTANT_SAMPLES,
    SIMULATION_POPULATION_SIZE,
    SIMULATION_SHARD_GENERATIONS,
    SIMULATION_TRIAL_GENERATIONS,
)
from ..exceptions import InvalidArgumentError
from ..operators.mutation import FactorKind, FactorMode, MutationScheme
from ..utils.seeding import stable_int

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiversitySample:
    """Averaged diversity of the trial sets generated for one (D, N_P, mode) case."""

    d: int
    n_p: int
    mode: FactorMode
    with_crossover: bool
    generations: int  # simulated generations of N_P trials each
    c_d_mean: float
    p_d_mean: float
    c_d_sem: float = 0.0
    p_d_sem: float = 0.0
    cr: float = DEFAULT_CROSSOVER_RATE

    def __post_init__(self):
        if self.generations < 1:
            raise InvalidArgumentError(f"generations must be >= 1, got {self.generations}")
        for name in ("c_d_mean", "p_d_mean"):
            value = getattr(self, name)
            if not np.isfinite(value) or value < 0:
                raise InvalidArgumentError(f"{name} must be finite and >= 0, got {value}")

    @property
    def mode_label(self) -> str:
        return self.mode.kind.value


@dataclass(frozen=True)
class SimulationPreset:
    """Parameter set reproducing one of the diversity figures."""

    name: str
    modes: tuple[FactorMode, ...]
    samples: int
    n_p: int
    cr: float
    with_crossover: bool
    base_vector: tuple[float, ...] = SIMULATION_BASE_VECTOR
    box: tuple[float, float] = SIMULATION_BOX


def preset_modes(
    cmf_value: float = SIMULATION_CMF_VALUE,
    factor_range: tuple[float, float] = SIMULATION_FACTOR_RANGE,
) -> tuple[FactorMode, ...]:
    low, high = factor_range
    return (
        FactorMode.cmf(cmf_value),
        FactorMode.srmf(low, high),
        FactorMode.vrmf(low, high),
    )


PRESETS = {
    PRESET_MUTANT_GEOMETRY: SimulationPreset(
        name=PRESET_MUTANT_GEOMETRY,
        modes=preset_modes(),
        samples=SIMULATION_MUTANT_SAMPLES,
        n_p=SIMULATION_POPULATION_SIZE,
        cr=DEFAULT_CROSSOVER_RATE,
        with_crossover=False,
    ),
    PRESET_TRIAL_DIVERSITY: SimulationPreset(
        name=PRESET_TRIAL_DIVERSITY,
        modes=preset_modes(),
        samples=SIMULATION_TRIAL_GENERATIONS,
        n_p=SIMULATION_POPULATION_SIZE,
        cr=DEFAULT_CROSSOVER_RATE,
        with_crossover=True,
    ),
}


def get_preset(name: str) -> SimulationPreset:
    try:
        return PRESETS[name]
    except KeyError:
        raise InvalidArgumentError(
            f"Unknown preset '{name}', expected one of: {', '.join(PRESETS)}"
        ) from None


def _factor_block(
    mode: FactorMode, shape: tuple[int, ...], dimension: int, rng: np.random.Generator
):
    """Factors for a block of individuals, broadcastable against (*shape, D)."""
    if mode.kind is FactorKind.CMF:
        return mode.value
    if mode.kind is FactorKind.SRMF:
        return rng.uniform(mode.low, mode.high, size=(*shape, 1))
    return rng.uniform(mode.low, mode.high, size=(*shape, dimension))


def monte_carlo_mutants(
    mode: FactorMode,
    base_vector=SIMULATION_BASE_VECTOR,
    samples: int = SIMULATION_MUTANT_SAMPLES,
    rng: np.random.Generator | None = None,
    origin=None,
    box: tuple[float, float] | None = SIMULATION_BOX,
) -> np.ndarray:
    """Sample ``samples`` mutants V = origin + F * R with fixed donors.

    Returns a (samples, D) array. Coordinates leaving ``box`` are resampled
    uniformly inside it, the same repair the engine applies.
    """
    if samples < 1:
        raise InvalidArgumentError(f"samples must be >= 1, got {samples}")
    rng = rng if rng is not None else np.random.default_rng()
    direction = np.asarray(base_vector, dtype=float).reshape(-1)
    origin = np.zeros_like(direction) if origin is None else np.asarray(origin, dtype=float)
    if origin.shape != direction.shape:
        raise InvalidArgumentError(
            f"origin has shape {origin.shape}, base vector has shape {direction.shape}"
        )

    factors = _factor_block(mode, (samples,), direction.size, rng)
    cloud = origin + np.broadcast_to(factors, (samples, direction.size)) * direction

    if box is not None:
        low, high = box
        outside = (cloud < low) | (cloud > high)
        if outside.any():
            cloud[outside] = rng.uniform(low, high, size=int(outside.sum()))
    return cloud


def _centroid_distances(trials: np.ndarray) -> np.ndarray:
    centroid = trials.mean(axis=1, keepdims=True)
    return np.linalg.norm(trials - centroid, axis=2).mean(axis=1)


def _pairwise_distances(trials: np.ndarray) -> np.ndarray:
    n_p = trials.shape[1]
    gram = trials @ trials.transpose(0, 2, 1)
    norms = np.einsum("gii->gi", gram)
    squared = np.clip(norms[:, :, None] + norms[:, None, :] - 2.0 * gram, 0.0, None)
    idx = np.arange(n_p)
    squared[:, idx, idx] = 0.0
    return np.sqrt(squared).sum(axis=(1, 2)) / (n_p * (n_p - 1))


def _trial_block(
    base: np.ndarray,
    mode: FactorMode,
    generations: int,
    rng: np.random.Generator,
    with_crossover: bool,
    cr: float,
) -> np.ndarray:
    """(G, N_P, D) trial vectors of ``generations`` independent DE/Rand/1 passes."""
    n_p, dimension = base.shape
    count = MutationScheme.RAND1.donor_count(n_p)

    keys = rng.random((generations, n_p, n_p))
    if n_p - 1 >= count:
        idx = np.arange(n_p)
        keys[:, idx, idx] = np.inf
    donors = np.argsort(keys, axis=2)[:, :, :count]
    x = base[donors]

    factor = _factor_block(mode, (generations, n_p), dimension, rng)
    if count == 2:
        mutants = x[:, :, 0] + factor * x[:, :, 1]
    else:
        mutants = x[:, :, 0] + factor * (x[:, :, 1] - x[:, :, 2])

    if not with_crossover:
        return mutants
    take = rng.random((generations, n_p, dimension)) <= cr
    forced = rng.integers(dimension, size=(generations, n_p, 1))
    np.put_along_axis(take, forced, True, axis=2)
    return np.where(take, mutants, base[None, :, :])


def _trial_diversity(
    base: np.ndarray,
    mode: FactorMode,
    generations: int,
    rng: np.random.Generator,
    with_crossover: bool,
    cr: float,
) -> tuple[np.ndarray, np.ndarray]:
    """Per-generation C_D and P_D of the trial sets."""
    n_p, dimension = base.shape
    chunk = max(1, min(generations, SIMULATION_CHUNK_ELEMENTS // (n_p * dimension)))
    c_d, p_d = [], []
    done = 0
    while done < generations:
        size = min(chunk, generations - done)
        trials = _trial_block(base, mode, size, rng, with_crossover, cr)
        c_d.append(_centroid_distances(trials))
        p_d.append(_pairwise_distances(trials))
        done += size
    return np.concatenate(c_d), np.concatenate(p_d)


def _mean_and_sem(values: np.ndarray) -> tuple[float, float]:
    if values.size < 2:
        return float(values.mean()), 0.0
    return float(values.mean()), float(values.std(ddof=1) / np.sqrt(values.size))


def _check_trial_arguments(d: int, n_p: int, samples: int, cr: float) -> None:
    if d < 1:
        raise InvalidArgumentError(f"Dimension must be at least 1, got {d}")
    MutationScheme.RAND1.check_population(n_p)
    if samples < 1:
        raise InvalidArgumentError(f"samples must be >= 1, got {samples}")
    if not 0.0 <= cr <= 1.0:
        raise InvalidArgumentError(f"Crossover rate must lie in [0, 1], got {cr}")


def _as_sample(d, n_p, mode, with_crossover, cr, c_d, p_d) -> DiversitySample:
    c_d_mean, c_d_sem = _mean_and_sem(c_d)
    p_d_mean, p_d_sem = _mean_and_sem(p_d)
    return DiversitySample(
        d=d,
        n_p=n_p,
        mode=mode,
        with_crossover=with_crossover,
        generations=int(c_d.size),
        c_d_mean=c_d_mean,
        p_d_mean=p_d_mean,
        c_d_sem=c_d_sem,
        p_d_sem=p_d_sem,
        cr=cr,
    )


def monte_carlo_trials(
    d: int,
    n_p: int,
    mode: FactorMode,
    samples: int = SIMULATION_TRIAL_GENERATIONS,
    rng: np.random.Generator | None = None,
    with_crossover: bool = True,
    cr: float = DEFAULT_CROSSOVER_RATE,
) -> DiversitySample:
    """Mean trial-set diversity over ``samples`` simulated generations.

    ``samples`` counts generations, not trial vectors: each generation builds
    one trial per target, N_P in all, and C_D and P_D are measured on that
    set. The returned means and standard errors are taken over generations.
    The base population is drawn from ``rng`` first, uniform in [0, 1]^d, and
    held fixed.
    """
    _check_trial_arguments(d, n_p, samples, cr)
    rng = rng if rng is not None else np.random.default_rng()
    base = rng.random((n_p, d))
    c_d, p_d = _trial_diversity(base, mode, samples, rng, with_crossover, cr)
    return _as_sample(d, n_p, mode, with_crossover, cr, c_d, p_d)


def simulate_diversity(
    d_values,
    n_p_values,
    modes,
    samples: int = SIMULATION_TRIAL_GENERATIONS,
    seed: int = DEFAULT_MASTER_SEED,
    with_crossover: bool = True,
    cr: float = DEFAULT_CROSSOVER_RATE,
    workers: int = 1,
) -> list[DiversitySample]:
    """Run monte-carlo trials for every (D, N_P, mode) case.

    ``samples`` is the number of generations per case, as in
    ``monte_carlo_trials``. Each case splits them into fixed-size shards,
    each with its own ``SeedSequence`` child, so results do not depend on ``workers``. The base
    population of a (D, N_P) pair is shared by every mode.
    """
    results = []
    with Parallel(n_jobs=workers) as parallel:
        for d in d_values:
            for n_p in n_p_values:
                _check_trial_arguments(d, n_p, samples, cr)
                for mode in modes:
                    sequence = np.random.SeedSequence(stable_int(int(seed), int(d), int(n_p)))
                    base = np.random.default_rng(sequence).random((n_p, d))
                    shards = ceil(samples / SIMULATION_SHARD_GENERATIONS)
                    sizes = [SIMULATION_SHARD_GENERATIONS] * (shards - 1)
                    sizes.append(samples - SIMULATION_SHARD_GENERATIONS * (shards - 1))

                    parts = parallel(
                        delayed(_trial_diversity)(
                            base, mode, size, np.random.default_rng(child), with_crossover, cr
                        )
                        for size, child in zip(sizes, sequence.spawn(shards), strict=True)
                    )
                    c_d = np.concatenate([part[0] for part in parts])
                    p_d = np.concatenate([part[1] for part in parts])
                    sample = _as_sample(d, n_p, mode, with_crossover, cr, c_d, p_d)
                    logger.info(
                        "Simulated d=%d n_p=%d mode=%s: C_D=%.4f P_D=%.4f",
                        d,
                        n_p,
                        sample.mode_label,
                        sample.c_d_mean,
                        sample.p_d_mean,
                    )
                    results.append(sample)
    return results


def simulate_mutant_clouds(
    modes,
    samples: int = SIMULATION_MUTANT_SAMPLES,
    seed: int = DEFAULT_MASTER_SEED,
    base_vector=SIMULATION_BASE_VECTOR,
    box: tuple[float, float] | None = SIMULATION_BOX,
) -> dict[str, np.ndarray]:
    """One mutant cloud per mode, keyed by mode identifier."""
    clouds = {}
    for mode in modes:
        rng = np.random.default_rng(stable_int(int(seed), mode.kind.value))
        clouds[mode.kind.value] = monte_carlo_mutants(
            mode, base_vector, samples, rng, box=box
        )
    return clouds


def write_diversity_csv(samples: list[DiversitySample], path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    rows = [
        [s.d, s.n_p, s.mode_label, s.generations, s.c_d_mean, s.p_d_mean, s.c_d_sem, s.p_d_sem]
        for s in samples
    ]
    pd.DataFrame(rows, columns=DIVERSITY_CSV_COLUMNS).to_csv(path, index=False)
    return path


def write_point_cloud_csv(clouds: dict[str, np.ndarray], path: Path) -> Path:
    """Write mutant clouds as rows (mode, sample, x1, ..., xD)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frames = []
    for label, cloud in clouds.items():
        frame = pd.DataFrame(
            cloud, columns=[f"x{i + 1}" for i in range(cloud.shape[1])]
        )
        frame.insert(0, POINT_CLOUD_ID_COLUMNS[1], np.arange(cloud.shape[0]))
        frame.insert(0, POINT_CLOUD_ID_COLUMNS[0], label)
        frames.append(frame)
    pd.concat(frames, ignore_index=True).to_csv(path, index=False)
    return path
