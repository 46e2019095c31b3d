"""Binomial crossover between a parent and its mutant."""

import numpy as np

from ..exceptions import InvalidArgumentError


def crossover(
    parent: np.ndarray, mutant: np.ndarray, cr: float, rng: np.random.Generator
) -> np.ndarray:
    """Build the trial vector U from ``parent`` and ``mutant``.

    Coordinate d comes from the mutant when its uniform draw is <= ``cr`` or when
    d is the forced index d_rand, so at least one coordinate always crosses.
    Draw order: the D uniforms first, then d_rand.
    """
    parent = np.asarray(parent, dtype=float)
    mutant = np.asarray(mutant, dtype=float)
    if parent.shape != mutant.shape or parent.ndim != 1:
        raise InvalidArgumentError(
            f"Parent and mutant must be vectors of equal length, "
            f"got shapes {parent.shape} and {mutant.shape}"
        )
    if not 0.0 <= cr <= 1.0:
        raise InvalidArgumentError(f"Crossover rate must lie in [0, 1], got {cr}")

    dimension = parent.size
    take_mutant = rng.random(dimension) <= cr
    take_mutant[rng.integers(dimension)] = True
    return np.where(take_mutant, mutant, parent)
