"""Experiment archive layout, reading and the reports derived from it.

An archive is a directory holding ``manifest.json``, one sub-directory per
cell with one history CSV per run, and ``benchmarks/`` with the shift and
rotation data of every function used. Every report here is a pure function of
those files.
"""

import json
import logging
from dataclasses import asdict
from pathlib import Path

import numpy as np
import pandas as pd

from ..constants import (
    CURVE_CSV_COLUMNS,
    HISTORY_CSV_COLUMNS,
    MANIFEST_FILENAME,
    RUN_FILENAME_EXTENSION,
    RUN_FILENAME_PREFIX,
    SUMMARY_CSV_COLUMNS,
)
from ..core.types import HistoryEntry
from ..exceptions import ArchiveError
from .models import ArchiveManifest, CellEntry

logger = logging.getLogger(__name__)


def run_file(cell_id: str, run_index: int) -> str:
    """History CSV of a run, relative to the archive root."""
    return f"{cell_id}/{RUN_FILENAME_PREFIX}_{run_index:03d}{RUN_FILENAME_EXTENSION}"


def write_history(history: list[HistoryEntry], path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame([asdict(entry) for entry in history], columns=HISTORY_CSV_COLUMNS)
    frame.to_csv(path, index=False)
    return path


def read_history(archive_dir: Path, relative: str) -> pd.DataFrame:
    path = Path(archive_dir) / relative
    if not path.exists():
        raise ArchiveError(f"Run history not found: {path}")
    return pd.read_csv(path)


def write_manifest(manifest: ArchiveManifest, archive_dir: Path) -> Path:
    """Write the manifest with sorted keys so equal archives are byte-identical."""
    path = Path(archive_dir) / MANIFEST_FILENAME
    payload = json.dumps(manifest.model_dump(mode="json"), indent=2, sort_keys=True)
    path.write_text(payload + "\n")
    return path


def read_manifest(archive_dir: Path) -> ArchiveManifest:
    path = Path(archive_dir) / MANIFEST_FILENAME
    if not path.exists():
        raise ArchiveError(f"No {MANIFEST_FILENAME} in {archive_dir}")
    return ArchiveManifest.model_validate_json(path.read_text())


def get_cell(manifest: ArchiveManifest, cell_id: str) -> CellEntry:
    cell = manifest.cell(cell_id)
    if cell is None:
        known = ", ".join(c.cell_id for c in manifest.cells)
        raise ArchiveError(f"Unknown cell '{cell_id}'. Known cells: {known}")
    return cell


def _aligned(histories: list[pd.DataFrame], column: str, length: int) -> pd.DataFrame:
    """(generation x run) table of ``column``, NaN past the end of shorter runs."""
    return pd.DataFrame(
        {i: h[column].reset_index(drop=True) for i, h in enumerate(histories)}
    ).reindex(range(length))


def emit_curves(archive_dir: Path, cell_id: str, out: Path | None = None) -> pd.DataFrame:
    """Median convergence and diversity curves of a cell, one row per generation.

    A run that terminated early keeps its final best value for the remaining
    rows, so the median best-so-far stays non-increasing. Diversity medians
    only use runs still alive at that generation.
    """
    manifest = read_manifest(archive_dir)
    cell = get_cell(manifest, cell_id)
    runs = cell.completed_runs()
    if not runs:
        raise ArchiveError(f"Cell '{cell_id}' has no completed runs")

    histories = [read_history(archive_dir, run.file) for run in runs]
    length = max(len(h) for h in histories)

    best = _aligned(histories, "best_value_so_far", length).ffill()
    curves = pd.DataFrame(
        {
            "nfc": _aligned(histories, "nfc", length).max(axis=1).astype(int),
            "best_value_so_far_median": best.median(axis=1),
            "best_value_so_far_iqr": best.quantile(0.75, axis=1) - best.quantile(0.25, axis=1),
            "c_d_median": _aligned(histories, "centroid_diversity", length).median(axis=1),
            "p_d_median": _aligned(histories, "pairwise_diversity", length).median(axis=1),
        },
        columns=CURVE_CSV_COLUMNS,
    )

    if out is not None:
        out = Path(out)
        out.parent.mkdir(parents=True, exist_ok=True)
        curves.to_csv(out, index=False)
        logger.info("Wrote %d curve rows for %s to %s", len(curves), cell_id, out)
    return curves


def final_errors(manifest: ArchiveManifest, family: str) -> dict[str, list[float]]:
    """Final errors of the completed runs of a cell family, keyed by function."""
    errors = {}
    for cell in manifest.family(family):
        completed = cell.completed_runs()
        if completed:
            errors[cell.function] = [run.final_error for run in completed]
    return errors


def summarize_cells(archive_dir: Path, out: Path | None = None) -> pd.DataFrame:
    """Mean, std and median final error plus success rate of every cell."""
    manifest = read_manifest(archive_dir)
    evtr = manifest.config.evtr
    rows = []
    for cell in manifest.cells:
        errors = np.array([run.final_error for run in cell.completed_runs()], dtype=float)
        if errors.size == 0:
            rows.append([cell.cell_id, 0, np.nan, np.nan, np.nan, np.nan])
            continue
        rows.append(
            [
                cell.cell_id,
                int(errors.size),
                float(errors.mean()),
                float(errors.std(ddof=1)) if errors.size > 1 else 0.0,
                float(np.median(errors)),
                float((errors <= evtr).mean()),
            ]
        )
    summary = pd.DataFrame(rows, columns=SUMMARY_CSV_COLUMNS)
    if out is not None:
        out = Path(out)
        out.parent.mkdir(parents=True, exist_ok=True)
        summary.to_csv(out, index=False)
    return summary
