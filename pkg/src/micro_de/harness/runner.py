"""Run-matrix execution: seeded run tasks fanned out to a joblib worker pool."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from joblib import Parallel, delayed

from .. import __version__
from ..benchmarks import BenchmarkFunction, get_function
from ..constants import (
    BENCHMARK_DATA_DIRECTORY,
    BENCHMARK_DATA_EXTENSION,
    CELL_ID_SEPARATOR,
    STATUS_COMPLETED,
    STATUS_FAILED,
    STATUS_PENDING,
)
from ..core.engine import run
from ..core.types import RunConfig, TerminationCriteria
from ..operators.mutation import MutationConfig, parse_scheme
from ..utils.seeding import derive_seed
from .archive import run_file, write_history, write_manifest
from .models import (
    ArchiveManifest,
    CellEntry,
    CellSpec,
    ExperimentConfig,
    FactorSnapshot,
    RunEntry,
)

logger = logging.getLogger(__name__)

__all__ = ["RunTask", "derive_seed", "execute_run", "run_matrix"]


@dataclass(frozen=True)
class RunTask:
    """Everything a worker needs to execute one run and write its history."""

    cell: CellSpec
    run_index: int
    seed: int
    cr: float
    evtr: float
    nfc_max: int
    shared_factor: bool
    record_diversity: bool
    suite_seed: int
    archive_dir: str


@lru_cache(maxsize=32)
def _objective(name: str, dimension: int, suite_seed: int) -> BenchmarkFunction:
    return get_function(name, dimension, suite_seed)


def execute_run(task: RunTask) -> RunEntry:
    """
    Execute one run inside a worker.

    Failures are returned as a failed RunEntry instead of raised, so one bad run
    never takes down the rest of the matrix.
    """
    relative = run_file(task.cell.cell_id, task.run_index)
    try:
        objective = _objective(task.cell.function, task.cell.d, task.suite_seed)
        config = RunConfig(
            bounds=objective.bounds,
            n_p=task.cell.n_p,
            mutation=MutationConfig(
                scheme=parse_scheme(task.cell.scheme),
                mode=task.cell.mode,
                shared_factor=task.shared_factor,
            ),
            termination=TerminationCriteria(
                vtr=objective.optimum_value, nfc_max=task.nfc_max, evtr=task.evtr
            ),
            cr=task.cr,
            seed=task.seed,
            record_diversity=task.record_diversity,
        )
        record = run(config, objective)
        write_history(record.history, Path(task.archive_dir) / relative)
    except Exception as e:
        return RunEntry(
            run=task.run_index,
            seed=task.seed,
            file=relative,
            status=STATUS_FAILED,
            error=f"{type(e).__name__}: {e}",
        )

    return RunEntry(
        run=task.run_index,
        seed=task.seed,
        file=relative,
        status=STATUS_COMPLETED,
        final_error=record.final_error,
        final_best_value=record.final_best.fitness,
        nfc=record.nfc,
        generations=record.generations,
        terminated_by=record.terminated_by.value,
    )


def _update_cell_status(
    cells: dict[str, CellEntry], cell_id: str, status: str, **additional_fields
) -> None:
    """
    Update a cell's status with additional fields.

    Args:
        cells: Cell entries keyed by cell id
        cell_id: Cell to update
        status: New status value
        **additional_fields: Additional fields to update
    """
    cell = cells[cell_id]
    cell.status = status
    for key, value in additional_fields.items():
        setattr(cell, key, value)


def _benchmark_data_file(function: str, dimension: int) -> str:
    name = f"{function}{CELL_ID_SEPARATOR}d{dimension}{BENCHMARK_DATA_EXTENSION}"
    return f"{BENCHMARK_DATA_DIRECTORY}/{name}"


def run_matrix(
    config: ExperimentConfig, out_dir: Path, workers: int | None = None
) -> ArchiveManifest:
    """
    Execute every run of every cell and write the archive.

    Seeds derive from (master_seed, cell id, run index), so the archive does
    not depend on ``workers``. Failed runs mark their cell as failed; the
    rest of the matrix still runs.
    """
    workers = config.workers if workers is None else workers
    archive = Path(out_dir)
    archive.mkdir(parents=True, exist_ok=True)
    cell_specs = config.cells()

    cells: dict[str, CellEntry] = {}
    for spec in cell_specs:
        cells[spec.cell_id] = CellEntry(
            cell_id=spec.cell_id,
            family=spec.family,
            function=spec.function,
            d=spec.d,
            n_p=spec.n_p,
            scheme=spec.scheme,
            mode=spec.mode_label,
            factor=FactorSnapshot.of(spec.mode),
            nfc_max=config.nfc_max(spec.d),
            status=STATUS_PENDING,
            benchmark_data=_benchmark_data_file(spec.function, spec.d),
        )

    for function, dimension in dict.fromkeys((s.function, s.d) for s in cell_specs):
        get_function(function, dimension, config.master_seed).save(
            archive / _benchmark_data_file(function, dimension)
        )

    tasks = [
        RunTask(
            cell=spec,
            run_index=index,
            seed=derive_seed(config.master_seed, spec.cell_id, index),
            cr=config.cr,
            evtr=config.evtr,
            nfc_max=config.nfc_max(spec.d),
            shared_factor=config.shared_factor,
            record_diversity=config.record_diversity,
            suite_seed=config.master_seed,
            archive_dir=str(archive),
        )
        for spec in cell_specs
        for index in range(config.n_run)
    ]

    logger.info(
        "Running %d cells x %d runs on %d worker(s) into %s",
        len(cell_specs),
        config.n_run,
        workers,
        archive,
    )
    results = Parallel(n_jobs=workers)(delayed(execute_run)(task) for task in tasks)

    by_cell: dict[str, list[RunEntry]] = {cell_id: [] for cell_id in cells}
    for task, entry in zip(tasks, results, strict=True):
        by_cell[task.cell.cell_id].append(entry)

    for cell_id, runs in by_cell.items():
        failed = [r for r in runs if r.status == STATUS_FAILED]
        if failed:
            for r in failed:
                logger.warning("Run %d of %s failed: %s", r.run, cell_id, r.error)
            _update_cell_status(
                cells,
                cell_id,
                STATUS_FAILED,
                runs=runs,
                error=f"{len(failed)} of {len(runs)} runs failed",
            )
        else:
            _update_cell_status(cells, cell_id, STATUS_COMPLETED, runs=runs)
            logger.info("Cell %s completed (%d runs)", cell_id, len(runs))

    manifest = ArchiveManifest(version=__version__, config=config, cells=list(cells.values()))
    write_manifest(manifest, archive)
    return manifest
