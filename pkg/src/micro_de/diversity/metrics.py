"""Population diversity measures: centroid distance and pairwise distance."""

import numpy as np
from scipy.spatial.distance import pdist

from ..exceptions import InvalidArgumentError


def _as_matrix(population) -> np.ndarray:
    """Accept a Population or anything shaped (N_P, D)."""
    positions = getattr(population, "positions", population)
    matrix = np.asarray(positions, dtype=float)
    if matrix.ndim == 1:
        matrix = matrix.reshape(-1, 1)
    if matrix.ndim != 2 or matrix.shape[0] == 0:
        raise InvalidArgumentError(
            f"Expected a non-empty (N_P, D) population, got shape {matrix.shape}"
        )
    return matrix


def centroid_distance(population) -> float:
    """Mean Euclidean distance of the members from their centroid (C_D)."""
    x = _as_matrix(population)
    centroid = x.mean(axis=0)
    return float(np.linalg.norm(x - centroid, axis=1).mean())


def pairwise_distance(population) -> float:
    """Mean Euclidean distance over ordered member pairs (P_D).

    Summing over i != j and dividing by N_P(N_P - 1) counts every unordered
    pair twice in both numerator and denominator, so this equals the mean of
    the unordered pair distances.
    """
    x = _as_matrix(population)
    if x.shape[0] < 2:
        raise InvalidArgumentError(
            f"Pairwise distance needs at least 2 members, got {x.shape[0]}"
        )
    return float(pdist(x, metric="euclidean").mean())
