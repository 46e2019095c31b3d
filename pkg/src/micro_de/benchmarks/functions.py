"""Classical analytic test functions.

Every function takes a 1-D array and returns a float. Optima:

- sphere, ellipsoid, rastrigin, ackley, griewank: 0 at the origin
- rosenbrock: 0 at (1, ..., 1)
- schwefel: 0 at (420.9687..., ..., 420.9687...)
"""

import numpy as np

from ..constants import ELLIPSOID_CONDITION, SCHWEFEL_ARGMAX, SCHWEFEL_LIMIT

__all__ = [
    "ackley",
    "ellipsoid",
    "griewank",
    "rastrigin",
    "rosenbrock",
    "schwefel",
    "sphere",
]


def sphere(x):
    """
    The Sphere function.

    Parameters
    ----------
    x : array_like
        1-D array of points at which the Sphere function is to be computed.

    Returns
    -------
    float
        The value of the Sphere function.

    """
    return float(np.square(x).sum())


def ellipsoid(x):
    """
    The high-conditioned Ellipsoid function.

    Coordinate weights grow geometrically from 1 to ``ELLIPSOID_CONDITION``.
    """
    x = np.asarray(x, dtype=float)
    ndim = x.size
    if ndim == 1:
        weights = np.ones(1)
    else:
        weights = ELLIPSOID_CONDITION ** (np.arange(ndim) / (ndim - 1))
    return float((weights * np.square(x)).sum())


def rosenbrock(x):
    """
    The Rosenbrock function.

    A single coordinate has no coupling term and reduces to (1 - x)^2.
    """
    x = np.asarray(x, dtype=float)
    if x.size == 1:
        return float(np.square(1.0 - x).sum())
    sum1 = ((x[1:] - x[:-1] ** 2) ** 2).sum()
    sum2 = np.square(1.0 - x[:-1]).sum()
    return float(100.0 * sum1 + sum2)


def rastrigin(x):
    """
    The Rastrigin function.

    Parameters
    ----------
    x : array_like
        1-D array of points at which the Rastrigin function is to be computed.

    Returns
    -------
    float
        The value of the Rastrigin function.

    """
    x = np.asarray(x, dtype=float)
    ndim = x.size
    sum1 = (np.square(x) - 10.0 * np.cos(2.0 * np.pi * x)).sum()
    return float(10.0 * ndim + sum1)


def ackley(x):
    """The Ackley function."""
    x = np.asarray(x, dtype=float)
    ndim = x.size
    sum1 = np.sqrt(1.0 / ndim * np.square(x).sum())
    sum2 = 1.0 / ndim * np.cos(2.0 * np.pi * x).sum()
    return float(20.0 + np.e - 20.0 * np.exp(-0.2 * sum1) - np.exp(sum2))


def griewank(x):
    """The Griewank function."""
    x = np.asarray(x, dtype=float)
    ndim = x.size
    sum1 = np.square(x).sum() / 4000.0
    prod1 = np.prod(np.cos(x / np.sqrt(np.arange(1, ndim + 1))))
    return float(1.0 + sum1 - prod1)


def _schwefel_gain(x: np.ndarray) -> np.ndarray:
    """Per-coordinate x * sin(sqrt|x|), folded back with a penalty beyond +-500."""
    ndim = x.size
    inside = x * np.sin(np.sqrt(np.abs(x)))

    folded_high = SCHWEFEL_LIMIT - np.mod(x, SCHWEFEL_LIMIT)
    above = folded_high * np.sin(np.sqrt(np.abs(folded_high))) - np.square(
        x - SCHWEFEL_LIMIT
    ) / (10000.0 * ndim)

    folded_low = np.mod(np.abs(x), SCHWEFEL_LIMIT) - SCHWEFEL_LIMIT
    below = folded_low * np.sin(np.sqrt(np.abs(folded_low))) - np.square(
        x + SCHWEFEL_LIMIT
    ) / (10000.0 * ndim)

    return np.where(x > SCHWEFEL_LIMIT, above, np.where(x < -SCHWEFEL_LIMIT, below, inside))


# Gain at the optimizer, computed with the same arithmetic so the optimum is exactly 0.
_SCHWEFEL_PEAK = float(_schwefel_gain(np.array([SCHWEFEL_ARGMAX]))[0])


def schwefel(x):
    """
    The Schwefel function (boundary-folded variant).

    Parameters
    ----------
    x : array_like
        1-D array of points at which the Schwefel function is to be computed.

    Returns
    -------
    float
        The value of the Schwefel function.

    """
    x = np.asarray(x, dtype=float)
    return float((_SCHWEFEL_PEAK - _schwefel_gain(x)).sum())
