"""Variation operators: mutant construction and binomial crossover."""

from .crossover import crossover
from .mutation import (
    FactorKind,
    FactorMode,
    MutationConfig,
    MutationScheme,
    draw_factor,
    mutant,
    parse_factor_mode,
    parse_scheme,
    select_donors,
)

__all__ = [
    "FactorKind",
    "FactorMode",
    "MutationConfig",
    "MutationScheme",
    "crossover",
    "draw_factor",
    "mutant",
    "parse_factor_mode",
    "parse_scheme",
    "select_donors",
]
