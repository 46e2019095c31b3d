"""Error hierarchy shared by the engine, the statistics and the harness."""

import numpy as np


class MicroDEError(Exception):
    """Base class for every error raised by this package."""


class InvalidConfigurationError(MicroDEError, ValueError):
    """A configuration cannot describe a valid run (population size, bounds, scheme)."""


class InvalidArgumentError(MicroDEError, ValueError):
    """An operation received arguments that violate its preconditions."""


class EvaluationError(MicroDEError):
    """The objective returned a non-finite value."""

    def __init__(self, message: str, position: np.ndarray | None = None):
        super().__init__(message)
        self.position = None if position is None else np.array(position, copy=True)


class ArchiveError(MicroDEError):
    """An experiment archive is missing data a report needs."""
