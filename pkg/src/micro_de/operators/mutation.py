"""Mutant vector construction for the five DE schemes and three factor modes."""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from ..constants import (
    DEFAULT_CMF_VALUE,
    DEFAULT_FACTOR_RANGE,
    MODE_CMF,
    MODE_SRMF,
    MODE_VRMF,
    SCHEME_BEST1,
    SCHEME_BEST2,
    SCHEME_MIN_POPULATION,
    SCHEME_RAND1,
    SCHEME_RAND2,
    SCHEME_T2B1,
)
from ..exceptions import InvalidArgumentError, InvalidConfigurationError


class MutationScheme(str, Enum):
    """Mutant vector schemes, valued by their stable identifiers."""

    RAND1 = SCHEME_RAND1
    BEST1 = SCHEME_BEST1
    TARGET_TO_BEST1 = SCHEME_T2B1
    RAND2 = SCHEME_RAND2
    BEST2 = SCHEME_BEST2

    @property
    def min_population(self) -> int:
        return SCHEME_MIN_POPULATION[self.value]

    def donor_count(self, n_p: int) -> int:
        """Number of random donors the formula reads (X_best and X_i excluded)."""
        if self is MutationScheme.RAND1 and n_p == 2:
            return 2
        return _DONOR_COUNTS[self]

    def check_population(self, n_p: int) -> None:
        """Raise if the scheme has no form for a population of ``n_p``."""
        if n_p < self.min_population:
            raise InvalidConfigurationError(
                f"Scheme '{self.value}' needs a population of at least "
                f"{self.min_population}, got N_P={n_p}"
            )


_DONOR_COUNTS = {
    MutationScheme.RAND1: 3,
    MutationScheme.BEST1: 2,
    MutationScheme.TARGET_TO_BEST1: 2,
    MutationScheme.RAND2: 5,
    MutationScheme.BEST2: 4,
}


class FactorKind(str, Enum):
    """How the mutation factor is drawn."""

    CMF = MODE_CMF
    SRMF = MODE_SRMF
    VRMF = MODE_VRMF


@dataclass(frozen=True)
class FactorMode:
    """A factor kind plus its constant value (CMF) or sampling range (SRMF, VRMF)."""

    kind: FactorKind
    value: float = DEFAULT_CMF_VALUE
    low: float = DEFAULT_FACTOR_RANGE[0]
    high: float = DEFAULT_FACTOR_RANGE[1]

    def __post_init__(self):
        if self.kind is FactorKind.CMF:
            if self.value < 0:
                raise InvalidConfigurationError(
                    f"CMF value must be non-negative, got {self.value}"
                )
        elif not 0 <= self.low < self.high:
            raise InvalidConfigurationError(
                f"Factor range must satisfy 0 <= lo < hi, got [{self.low}, {self.high}]"
            )

    @classmethod
    def cmf(cls, value: float = DEFAULT_CMF_VALUE) -> "FactorMode":
        return cls(FactorKind.CMF, value=value)

    @classmethod
    def srmf(
        cls,
        low: float = DEFAULT_FACTOR_RANGE[0],
        high: float = DEFAULT_FACTOR_RANGE[1],
    ) -> "FactorMode":
        return cls(FactorKind.SRMF, low=low, high=high)

    @classmethod
    def vrmf(
        cls,
        low: float = DEFAULT_FACTOR_RANGE[0],
        high: float = DEFAULT_FACTOR_RANGE[1],
    ) -> "FactorMode":
        return cls(FactorKind.VRMF, low=low, high=high)


@dataclass(frozen=True)
class MutationConfig:
    """Scheme, factor mode, and whether difference terms share one factor draw."""

    scheme: MutationScheme
    mode: FactorMode
    shared_factor: bool = False


def parse_scheme(name: str) -> MutationScheme:
    """Look up a scheme by its identifier."""
    try:
        return MutationScheme(name.lower())
    except ValueError:
        known = ", ".join(s.value for s in MutationScheme)
        raise InvalidConfigurationError(
            f"Unknown mutation scheme '{name}', expected one of: {known}"
        ) from None


def parse_factor_mode(
    name: str,
    value: float = DEFAULT_CMF_VALUE,
    factor_range: tuple[float, float] = DEFAULT_FACTOR_RANGE,
) -> FactorMode:
    """Build a factor mode from its identifier and parameters."""
    try:
        kind = FactorKind(name.lower())
    except ValueError:
        known = ", ".join(k.value for k in FactorKind)
        raise InvalidConfigurationError(
            f"Unknown factor mode '{name}', expected one of: {known}"
        ) from None
    low, high = factor_range
    return FactorMode(kind, value=value, low=low, high=high)


def draw_factor(
    mode: FactorMode, dimension: int, rng: np.random.Generator
) -> np.ndarray:
    """Factor vector for one difference term of one individual.

    CMF consumes no draws, SRMF draws one scalar shared by every dimension and
    VRMF draws one value per dimension.
    """
    if mode.kind is FactorKind.CMF:
        return np.full(dimension, mode.value)
    if mode.kind is FactorKind.SRMF:
        return np.full(dimension, rng.uniform(mode.low, mode.high))
    return rng.uniform(mode.low, mode.high, size=dimension)


def select_donors(
    n_p: int, target: int, count: int, rng: np.random.Generator
) -> np.ndarray:
    """Draw ``count`` mutually distinct member indices.

    The target is excluded whenever enough other members exist. Below that the
    reduced small-population forms apply and the donors are drawn from the
    whole population, still without repetition.
    """
    if count > n_p:
        raise InvalidConfigurationError(
            f"Cannot draw {count} distinct donors from a population of {n_p}"
        )
    if n_p - 1 >= count:
        candidates = np.delete(np.arange(n_p), target)
    else:
        candidates = np.arange(n_p)
    return rng.choice(candidates, size=count, replace=False)


def mutant(
    config: MutationConfig,
    positions: np.ndarray,
    fitness: np.ndarray,
    target: int,
    rng: np.random.Generator,
) -> np.ndarray:
    """Build the mutant vector V_i for ``target``.

    ``positions`` is the (N_P, D) matrix of the current generation and
    ``fitness`` its evaluated values, used to locate X_best. Draw order is
    donors first, then one factor vector per difference term.
    """
    n_p, dimension = positions.shape
    scheme = config.scheme
    scheme.check_population(n_p)

    donors = select_donors(n_p, target, scheme.donor_count(n_p), rng)
    x = positions
    first = draw_factor(config.mode, dimension, rng)

    def second_factor() -> np.ndarray:
        if config.shared_factor:
            return first
        return draw_factor(config.mode, dimension, rng)

    if scheme is MutationScheme.RAND1:
        if n_p == 2:
            # Two-member form: X_1 + F * X_2
            return x[donors[0]] + first * x[donors[1]]
        return x[donors[0]] + first * (x[donors[1]] - x[donors[2]])

    best = int(np.argmin(fitness))
    if scheme is MutationScheme.BEST1:
        return x[best] + first * (x[donors[0]] - x[donors[1]])
    if scheme is MutationScheme.TARGET_TO_BEST1:
        return (
            x[target]
            + first * (x[best] - x[target])
            + second_factor() * (x[donors[0]] - x[donors[1]])
        )
    if scheme is MutationScheme.BEST2:
        return (
            x[best]
            + first * (x[donors[0]] - x[donors[1]])
            + second_factor() * (x[donors[2]] - x[donors[3]])
        )
    if scheme is MutationScheme.RAND2:
        return (
            x[donors[0]]
            + first * (x[donors[1]] - x[donors[2]])
            + second_factor() * (x[donors[3]] - x[donors[4]])
        )
    raise InvalidArgumentError(f"Unhandled mutation scheme {scheme!r}")
