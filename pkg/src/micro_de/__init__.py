"""Micro-DE Lab - micro-differential evolution with vectorized random mutation factors."""

__version__ = "0.1.0"
