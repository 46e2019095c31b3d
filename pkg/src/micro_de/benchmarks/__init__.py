"""Benchmark objectives with known optima."""

from .suite import (
    FUNCTION_NAMES,
    BenchmarkCategory,
    BenchmarkFunction,
    composite_components,
    composition_weights,
    get_function,
    suite,
)

__all__ = [
    "FUNCTION_NAMES",
    "BenchmarkCategory",
    "BenchmarkFunction",
    "composite_components",
    "composition_weights",
    "get_function",
    "suite",
]
