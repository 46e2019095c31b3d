"""Rank-sum comparison of two cell families of an archive."""

from pathlib import Path

from ..constants import DEFAULT_ALPHA
from ..exceptions import ArchiveError
from ..stats.comparison import ComparisonReport, summarize
from .archive import final_errors, read_manifest


def compare(
    archive_dir: Path, reference: str, opponent: str, alpha: float = DEFAULT_ALPHA
) -> ComparisonReport:
    """Compare the final errors of two cell families over their common functions."""
    manifest = read_manifest(archive_dir)
    reference_errors = final_errors(manifest, reference)
    opponent_errors = final_errors(manifest, opponent)

    for family, errors in ((reference, reference_errors), (opponent, opponent_errors)):
        if not errors:
            families = sorted({c.family for c in manifest.cells})
            raise ArchiveError(
                f"No completed cells in family '{family}'. Known families: {families}"
            )

    missing_in_opponent = sorted(set(reference_errors) - set(opponent_errors))
    missing_in_reference = sorted(set(opponent_errors) - set(reference_errors))
    if missing_in_opponent or missing_in_reference:
        raise ArchiveError(
            "Families do not cover the same functions: "
            f"missing for {opponent}: {missing_in_opponent}, "
            f"missing for {reference}: {missing_in_reference}"
        )

    return summarize(
        reference_errors, opponent_errors, alpha, reference=reference, opponent=opponent
    )


def write_report(report: ComparisonReport, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report.model_dump_json(indent=2) + "\n")
    return path
