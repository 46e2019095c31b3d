"""Command-line interface: run, simulate-diversity, compare, curves, summary."""

import argparse
import logging
import sys
from pathlib import Path

from pydantic import ValidationError

from . import __version__
from .constants import (
    EXIT_ERROR,
    EXIT_INVALID_CONFIG,
    EXIT_PARTIAL_FAILURE,
    EXIT_SUCCESS,
    LOG_LEVELS,
    MODE_NAMES,
    MUTANT_CLOUD_FILENAME,
    PRESET_MUTANT_GEOMETRY,
    PRESET_TRIAL_DIVERSITY,
    SIMULATION_DIMENSIONS,
    TRIAL_DIVERSITY_FILENAME,
)
from .diversity.simulation import (
    PRESETS,
    get_preset,
    simulate_diversity,
    simulate_mutant_clouds,
    write_diversity_csv,
    write_point_cloud_csv,
)
from .exceptions import InvalidConfigurationError, MicroDEError
from .harness.archive import emit_curves, summarize_cells
from .harness.models import ExperimentConfig
from .harness.reports import compare, write_report
from .harness.runner import run_matrix
from .operators.mutation import parse_factor_mode
from .utils.config import Config
from .utils.log_utils import configure_logging

logger = logging.getLogger(__name__)


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected comma-separated integers, got '{text}'") from None


def _name_list(text: str) -> list[str]:
    names = [part.strip().lower() for part in text.split(",") if part.strip()]
    unknown = [n for n in names if n not in MODE_NAMES]
    if unknown:
        raise argparse.ArgumentTypeError(f"Unknown modes {unknown}, expected {MODE_NAMES}")
    return names


def _factor_range(text: str) -> tuple[float, float]:
    try:
        low, high = (float(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected LO:HI, got '{text}'") from None
    return low, high


def _boolean(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"Expected a boolean, got '{text}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="micro-de",
        description="Micro differential evolution experiments and diversity simulations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        default=Config.LOG_LEVEL,
        choices=LOG_LEVELS,
        type=str.upper,
        help="Logging level (default from MDE_LOG_LEVEL)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Execute an experiment matrix")
    run.add_argument("--config", type=Path, required=True, help="JSON experiment matrix")
    run.add_argument("--workers", type=int, default=None, help="Override the matrix's workers")
    run.add_argument("--out", type=Path, default=None, help="Archive directory")

    simulate = commands.add_parser(
        "simulate-diversity", help="Monte-Carlo mutant geometry or trial diversity"
    )
    simulate.add_argument(
        "--preset", choices=sorted(PRESETS), default=PRESET_TRIAL_DIVERSITY
    )
    simulate.add_argument("--d", type=_int_list, default=None, help="Dimensions, e.g. 10,100")
    simulate.add_argument("--np", type=_int_list, default=None, help="Population sizes")
    simulate.add_argument("--mode", type=_name_list, default=None, help="e.g. cmf,srmf,vrmf")
    simulate.add_argument(
        "--samples",
        type=int,
        default=None,
        help="Generations per case (trial preset) or points per cloud (geometry preset)",
    )
    simulate.add_argument("--range", type=_factor_range, default=None, help="SRMF/VRMF LO:HI")
    simulate.add_argument("--cmf-value", type=float, default=None, help="CMF factor")
    simulate.add_argument("--crossover", type=_boolean, default=None, help="Apply crossover")
    simulate.add_argument("--cr", type=float, default=None, help="Crossover rate")
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--workers", type=int, default=Config.WORKERS)
    simulate.add_argument("--out", type=Path, default=None, help="Output CSV")

    comparison = commands.add_parser("compare", help="Rank-sum comparison of two cell families")
    comparison.add_argument("--archive", type=Path, required=True)
    comparison.add_argument("--reference", required=True, help="Reference cell family")
    comparison.add_argument("--opponent", required=True, help="Opponent cell family")
    comparison.add_argument("--alpha", type=float, default=Config.ALPHA)
    comparison.add_argument("--out", type=Path, default=None, help="Write the report JSON here")

    curves = commands.add_parser("curves", help="Median curves of one cell")
    curves.add_argument("--archive", type=Path, required=True)
    curves.add_argument("--cell", required=True)
    curves.add_argument("--out", type=Path, default=None, help="Output CSV (stdout if omitted)")

    summary = commands.add_parser("summary", help="Per-cell final error statistics")
    summary.add_argument("--archive", type=Path, required=True)
    summary.add_argument("--out", type=Path, default=None, help="Output CSV (stdout if omitted)")

    return parser


def _default_output(filename: str) -> Path:
    Config.ensure_directories()
    return Config.ARCHIVE_DIRECTORY / filename


def _cmd_run(args) -> int:
    config = ExperimentConfig.load(args.config)
    if args.out is None:
        Config.ensure_directories()
    out = args.out or Config.ARCHIVE_DIRECTORY / config.name
    manifest = run_matrix(config, out, workers=args.workers)
    failed = manifest.failed_cells
    if failed:
        logger.warning(
            "%d of %d cells had failed runs: %s",
            len(failed),
            len(manifest.cells),
            ", ".join(c.cell_id for c in failed),
        )
        return EXIT_PARTIAL_FAILURE
    print(f"Archive written to {out}")
    return EXIT_SUCCESS


def _cmd_simulate(args) -> int:
    preset = get_preset(args.preset)
    low, high = args.range or (preset.modes[1].low, preset.modes[1].high)
    cmf_value = preset.modes[0].value if args.cmf_value is None else args.cmf_value
    mode_names = args.mode or MODE_NAMES
    modes = [parse_factor_mode(name, cmf_value, (low, high)) for name in mode_names]
    samples = args.samples or preset.samples

    if preset.name == PRESET_MUTANT_GEOMETRY:
        clouds = simulate_mutant_clouds(
            modes, samples, args.seed, preset.base_vector, preset.box
        )
        path = write_point_cloud_csv(clouds, args.out or _default_output(MUTANT_CLOUD_FILENAME))
    else:
        results = simulate_diversity(
            d_values=args.d or list(SIMULATION_DIMENSIONS),
            n_p_values=args.np or [preset.n_p],
            modes=modes,
            samples=samples,
            seed=args.seed,
            with_crossover=preset.with_crossover if args.crossover is None else args.crossover,
            cr=preset.cr if args.cr is None else args.cr,
            workers=args.workers,
        )
        path = write_diversity_csv(results, args.out or _default_output(TRIAL_DIVERSITY_FILENAME))
    print(f"Wrote {path}")
    return EXIT_SUCCESS


def _cmd_compare(args) -> int:
    report = compare(args.archive, args.reference, args.opponent, args.alpha)
    if args.out:
        write_report(report, args.out)
    print(report.model_dump_json(indent=2))
    return EXIT_SUCCESS


def _cmd_curves(args) -> int:
    curves = emit_curves(args.archive, args.cell, args.out)
    if args.out is None:
        curves.to_csv(sys.stdout, index=False)
    return EXIT_SUCCESS


def _cmd_summary(args) -> int:
    summary = summarize_cells(args.archive, args.out)
    if args.out is None:
        summary.to_csv(sys.stdout, index=False)
    return EXIT_SUCCESS


COMMANDS = {
    "run": _cmd_run,
    "simulate-diversity": _cmd_simulate,
    "compare": _cmd_compare,
    "curves": _cmd_curves,
    "summary": _cmd_summary,
}


def main(argv: list[str] | None = None) -> int:
    """Parse ``argv``, run the command and return its exit code."""
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except (ValidationError, InvalidConfigurationError, FileNotFoundError) as e:
        logger.error("Invalid configuration: %s", e)
        return EXIT_INVALID_CONFIG
    except MicroDEError as e:
        logger.error("%s", e)
        return EXIT_ERROR
