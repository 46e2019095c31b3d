"""Benchmark registry: shifted classical functions and rotated compositions.

Every member is defined on [-100, 100]^D. The shift vectors and rotation
matrices are generated from ``(seed, name, dimension)`` so the same suite seed
always yields the same landscapes, and ``BenchmarkFunction.save`` writes them
next to an archive for replay.
"""

import logging
import zipfile
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from functools import partial
from pathlib import Path

import numpy as np
from scipy.stats import special_ortho_group

from ..constants import (
    CATEGORY_COMPOSITE,
    CATEGORY_MULTIMODAL,
    CATEGORY_UNIMODAL,
    DEFAULT_BOUND,
    DEFAULT_MASTER_SEED,
    NPZ_ENTRY_TIMESTAMP,
    SCHWEFEL_ARGMAX,
    SCHWEFEL_SCALE,
    SHIFT_FRACTION,
)
from ..core.types import Bounds
from ..exceptions import EvaluationError, InvalidArgumentError, InvalidConfigurationError
from ..utils.seeding import stable_int
from . import functions

logger = logging.getLogger(__name__)


class BenchmarkCategory(str, Enum):
    UNIMODAL = CATEGORY_UNIMODAL
    MULTIMODAL = CATEGORY_MULTIMODAL
    COMPOSITE = CATEGORY_COMPOSITE


@dataclass(frozen=True)
class _Base:
    """A classical formula plus the affine map z = scale * y + offset into its domain."""

    formula: Callable[[np.ndarray], float]
    category: BenchmarkCategory
    scale: float = 1.0
    offset: float = 0.0


# Scales stretch [-100, 100] onto each function's customary search range.
_BASES = {
    "sphere": _Base(functions.sphere, BenchmarkCategory.UNIMODAL),
    "ellipsoid": _Base(functions.ellipsoid, BenchmarkCategory.UNIMODAL),
    "rosenbrock": _Base(functions.rosenbrock, BenchmarkCategory.MULTIMODAL, offset=1.0),
    "rastrigin": _Base(functions.rastrigin, BenchmarkCategory.MULTIMODAL, scale=0.0512),
    "ackley": _Base(functions.ackley, BenchmarkCategory.MULTIMODAL, scale=0.32),
    "griewank": _Base(functions.griewank, BenchmarkCategory.MULTIMODAL, scale=6.0),
    "schwefel": _Base(
        functions.schwefel,
        BenchmarkCategory.MULTIMODAL,
        scale=SCHWEFEL_SCALE,
        offset=SCHWEFEL_ARGMAX,
    ),
}


@dataclass(frozen=True)
class _Composition:
    components: tuple[str, ...]
    sigmas: tuple[float, ...]
    lambdas: tuple[float, ...]
    biases: tuple[float, ...]


_COMPOSITIONS = {
    "composite_1": _Composition(
        components=("rosenbrock", "ellipsoid", "rastrigin"),
        sigmas=(10.0, 20.0, 30.0),
        lambdas=(1.0, 1e-6, 1.0),
        biases=(0.0, 100.0, 200.0),
    ),
    "composite_2": _Composition(
        components=("rastrigin", "griewank", "schwefel"),
        sigmas=(20.0, 20.0, 20.0),
        lambdas=(1.0, 10.0, 1.0),
        biases=(0.0, 100.0, 200.0),
    ),
}

FUNCTION_NAMES = [*_BASES, *_COMPOSITIONS]


@dataclass(eq=False)
class BenchmarkFunction:
    """A named objective with its box, known optimum and generating data."""

    name: str
    dimension: int
    bounds: Bounds
    optimum_value: float
    optimizer: np.ndarray
    category: BenchmarkCategory
    formula: Callable[[np.ndarray], float]
    data: dict[str, np.ndarray] = field(default_factory=dict)

    def evaluate(self, position) -> float:
        """Objective value at ``position``; raises EvaluationError if not finite."""
        x = np.asarray(position, dtype=float)
        if x.shape != (self.dimension,):
            raise InvalidArgumentError(
                f"{self.name} expects a vector of length {self.dimension}, got shape {x.shape}"
            )
        value = float(self.formula(x))
        if not np.isfinite(value):
            raise EvaluationError(f"{self.name} returned {value}", position=x)
        return value

    def __call__(self, position) -> float:
        return self.evaluate(position)

    def save(self, path: Path) -> Path:
        """Write the shift/rotation data to ``path`` as ``.npz``."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        arrays = {
            "name": np.array(self.name),
            "dimension": np.array(self.dimension),
            "optimizer": self.optimizer,
            **self.data,
        }
        # Same layout np.load expects from np.savez, minus the wall-clock entry times.
        with zipfile.ZipFile(path, "w", compression=zipfile.ZIP_STORED) as bundle:
            for key, array in arrays.items():
                info = zipfile.ZipInfo(f"{key}.npy", date_time=NPZ_ENTRY_TIMESTAMP)
                with bundle.open(info, "w", force_zip64=True) as handle:
                    np.lib.format.write_array(handle, np.asanyarray(array), allow_pickle=False)
        logger.debug("Saved benchmark data for %s (D=%d) to %s", self.name, self.dimension, path)
        return path


def _shifted(x: np.ndarray, base: _Base, shift: np.ndarray) -> float:
    return base.formula(base.scale * (x - shift) + base.offset)


def composition_weights(
    squared_distances: np.ndarray, sigmas: np.ndarray, dimension: int
) -> np.ndarray:
    """Normalized Gaussian-distance weights of the composition components.

    A point sitting exactly on a component optimum gets an indicator weight.
    If every weight underflows the components are weighted equally.
    """
    squared_distances = np.asarray(squared_distances, dtype=float)
    on_optimum = squared_distances == 0.0
    if on_optimum.any():
        weights = on_optimum.astype(float)
    else:
        weights = np.exp(
            -squared_distances / (2.0 * dimension * np.square(sigmas))
        ) / np.sqrt(squared_distances)
    total = weights.sum()
    if total == 0.0:
        return np.full(weights.size, 1.0 / weights.size)
    return weights / total


def _composed(
    x: np.ndarray,
    composition: _Composition,
    shifts: np.ndarray,
    rotations: np.ndarray,
) -> float:
    diffs = x - shifts
    values = np.empty(len(composition.components))
    for i, name in enumerate(composition.components):
        base = _BASES[name]
        z = base.scale * (rotations[i] @ diffs[i]) + base.offset
        values[i] = composition.lambdas[i] * base.formula(z) + composition.biases[i]
    weights = composition_weights(
        np.square(diffs).sum(axis=1), np.asarray(composition.sigmas), x.size
    )
    return float(weights @ values)


def _function_rng(name: str, dimension: int, seed: int) -> np.random.Generator:
    return np.random.default_rng(stable_int(int(seed), name, int(dimension)))


def _draw_shift(dimension: int, rng: np.random.Generator) -> np.ndarray:
    limit = SHIFT_FRACTION * DEFAULT_BOUND
    return rng.uniform(-limit, limit, size=dimension)


def _draw_rotation(dimension: int, rng: np.random.Generator) -> np.ndarray:
    if dimension == 1:
        return np.eye(1)
    return special_ortho_group.rvs(dimension, random_state=rng)


def get_function(
    name: str, dimension: int, seed: int = DEFAULT_MASTER_SEED
) -> BenchmarkFunction:
    """Build benchmark ``name`` in ``dimension`` dimensions from the suite seed."""
    if dimension < 1:
        raise InvalidConfigurationError(f"Dimension must be at least 1, got {dimension}")

    rng = _function_rng(name, dimension, seed)
    bounds = Bounds.uniform(-DEFAULT_BOUND, DEFAULT_BOUND, dimension)

    if name in _BASES:
        base = _BASES[name]
        shift = _draw_shift(dimension, rng)
        return BenchmarkFunction(
            name=name,
            dimension=dimension,
            bounds=bounds,
            optimum_value=0.0,
            optimizer=shift.copy(),
            category=base.category,
            formula=partial(_shifted, base=base, shift=shift),
            data={"shift": shift},
        )

    if name in _COMPOSITIONS:
        composition = _COMPOSITIONS[name]
        count = len(composition.components)
        shifts = np.vstack([_draw_shift(dimension, rng) for _ in range(count)])
        rotations = np.stack([_draw_rotation(dimension, rng) for _ in range(count)])
        return BenchmarkFunction(
            name=name,
            dimension=dimension,
            bounds=bounds,
            optimum_value=composition.biases[0],
            optimizer=shifts[0].copy(),
            category=BenchmarkCategory.COMPOSITE,
            formula=partial(
                _composed, composition=composition, shifts=shifts, rotations=rotations
            ),
            data={
                "shifts": shifts,
                "rotations": rotations,
                "sigmas": np.asarray(composition.sigmas),
                "lambdas": np.asarray(composition.lambdas),
                "biases": np.asarray(composition.biases),
            },
        )

    raise InvalidConfigurationError(
        f"Unknown benchmark function '{name}', expected one of: {', '.join(FUNCTION_NAMES)}"
    )


def composite_components(name: str) -> tuple[str, ...]:
    """Names of the classical functions blended by composite ``name``."""
    try:
        return _COMPOSITIONS[name].components
    except KeyError:
        raise InvalidArgumentError(f"'{name}' is not a composite benchmark") from None


def suite(dimension: int, seed: int = DEFAULT_MASTER_SEED) -> list[BenchmarkFunction]:
    """Every registered benchmark in ``dimension`` dimensions."""
    return [get_function(name, dimension, seed) for name in FUNCTION_NAMES]
