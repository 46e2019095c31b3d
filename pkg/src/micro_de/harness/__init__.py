"""Experiment matrices, archives and reports."""

from .archive import emit_curves, read_manifest, summarize_cells
from .models import ArchiveManifest, ExperimentConfig, FactorModeSpec
from .reports import compare, write_report
from .runner import derive_seed, run_matrix

__all__ = [
    "ArchiveManifest",
    "ExperimentConfig",
    "FactorModeSpec",
    "compare",
    "derive_seed",
    "emit_curves",
    "read_manifest",
    "run_matrix",
    "summarize_cells",
    "write_report",
]
