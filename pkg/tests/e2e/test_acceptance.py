"""End-to-end acceptance tests.

These reproduce the qualitative claims the library exists to study (diversity
ordering of the factor modes, mutant geometry, convergence on a small
population) at desk scale, and check determinism of whole archives.
"""

import numpy as np
import pandas as pd
import pytest

from src.micro_de.benchmarks import FUNCTION_NAMES, get_function
from src.micro_de.core.engine import run
from src.micro_de.core.types import RunConfig, TerminationCriteria
from src.micro_de.diversity.simulation import (
    monte_carlo_mutants,
    preset_modes,
    simulate_diversity,
)
from src.micro_de.harness.archive import read_history, read_manifest
from src.micro_de.harness.models import ExperimentConfig
from src.micro_de.harness.runner import run_matrix
from src.micro_de.operators.crossover import crossover
from src.micro_de.operators.mutation import FactorMode, MutationConfig, MutationScheme
from src.micro_de.utils.seeding import stable_int

# Mark all tests in this module as slow E2E tests
pytestmark = pytest.mark.slow

SIGMA_MARGIN = 3.0
SMOKE_CROSSOVER_RATE = 0.1


def separated(low, high, metric):
    """True when high exceeds low by more than three combined standard errors."""
    gap = getattr(high, f"{metric}_mean") - getattr(low, f"{metric}_mean")
    sem = np.hypot(getattr(high, f"{metric}_sem"), getattr(low, f"{metric}_sem"))
    return gap > SIGMA_MARGIN * sem


class TestDiversityClaims:
    """Monte-Carlo diversity of the three factor modes."""

    @pytest.mark.timeout(300)
    @pytest.mark.parametrize("n_p,samples", [(5, 10_000), (50, 2_000)])
    @pytest.mark.parametrize("d", [10, 100, 1000])
    def test_cmf_least_vrmf_most_diverse(self, d, n_p, samples):
        """Mean C_D and P_D order CMF < SRMF < VRMF with 3-SEM gaps."""
        cmf, srmf, vrmf = simulate_diversity(
            [d], [n_p], preset_modes(), samples=samples, seed=0
        )
        for metric in ("c_d", "p_d"):
            assert separated(cmf, srmf, metric), (d, n_p, metric)
            assert separated(srmf, vrmf, metric), (d, n_p, metric)

    @pytest.mark.timeout(300)
    def test_small_vrmf_population_beats_large_cmf_population(self):
        """At D = 1000, VRMF with N_P = 5 is more diverse than CMF with N_P = 50."""
        cmf, _, vrmf = preset_modes()
        (small_vrmf,) = simulate_diversity([1000], [5], [vrmf], samples=10_000, seed=0)
        (large_cmf,) = simulate_diversity([1000], [50], [cmf], samples=10_000, seed=0)
        assert separated(large_cmf, small_vrmf, "c_d")

    def test_mutant_cloud_ranks(self):
        """From fixed donors SRMF mutants lie on a line and VRMF mutants span the plane."""
        _, srmf, vrmf = preset_modes()
        rng = np.random.default_rng(0)
        ranks = {}
        for mode in (srmf, vrmf):
            cloud = monte_carlo_mutants(mode, (1.0, 1.0), 100, rng)
            ranks[mode.kind.value] = np.linalg.svd(cloud - cloud.mean(axis=0), compute_uv=False)
        assert ranks["srmf"][1] < 1e-9 * ranks["srmf"][0]
        assert ranks["vrmf"][1] > 0.01 * ranks["vrmf"][0]


class TestCrossoverContract:
    """Binomial crossover at scale."""

    @pytest.mark.timeout(120)
    def test_fraction_within_binomial_interval(self):
        """10^5 trials at D = 1000 keep a mutant coordinate and match the expected fraction.

        The forced coordinate lifts the expected fraction to C_r + (1 - C_r) / D.
        """
        d, cr, trials = 1000, 0.9, 100_000
        rng = np.random.default_rng(11)
        parent, mutant = np.zeros(d), np.ones(d)
        taken = 0
        for _ in range(trials):
            trial = crossover(parent, mutant, cr, rng)
            count = int(trial.sum())
            assert count >= 1
            taken += count
        expected = cr + (1.0 - cr) / d
        half_width = 2.576 * np.sqrt(expected * (1.0 - expected) / (d * trials))
        assert abs(taken / (d * trials) - expected) <= half_width


class TestConvergence:
    """Optimization behaviour of the engine."""

    @pytest.mark.timeout(120)
    def test_sphere_smoke(self):
        """Sphere D = 10, N_P = 5, DE/Best/1, VRMF, Cr = 0.1: median final error below 1e-2.

        Pilot over the same 30 seeds: Cr = 0.9 stagnates (median about 1.1e3,
        no run below 1e-2) while Cr = 0.1 reaches about 8e-9.
        """
        objective = get_function("sphere", 10)
        errors = []
        for seed in range(30):
            config = RunConfig(
                bounds=objective.bounds,
                n_p=5,
                mutation=MutationConfig(MutationScheme.BEST1, FactorMode.vrmf()),
                cr=SMOKE_CROSSOVER_RATE,
                termination=TerminationCriteria(
                    vtr=objective.optimum_value, nfc_max=10_000, evtr=1e-8
                ),
                seed=stable_int("sphere-smoke", seed),
                record_diversity=False,
            )
            errors.append(run(config, objective).final_error)
        assert np.median(errors) < 1e-2

    @pytest.mark.timeout(600)
    def test_full_suite_best_so_far_never_increases(self, temp_archive_dir):
        """30 runs on every suite member give non-increasing best-so-far histories."""
        config = ExperimentConfig(
            functions=FUNCTION_NAMES,
            schemes=["rand1"],
            modes=["vrmf"],
            n_p=[5],
            d=[5],
            nfc_max_multiplier=200,
            n_run=30,
            record_diversity=False,
        )
        out = temp_archive_dir / "suite"
        manifest = run_matrix(config, out, workers=-1)
        assert not manifest.failed_cells
        violations = 0
        for cell in manifest.cells:
            for entry in cell.runs:
                best = read_history(out, entry.file)["best_value_so_far"].to_numpy()
                violations += int(np.sum(np.diff(best) > 0))
        assert violations == 0


class TestDeterminism:
    """Archives do not depend on the worker count."""

    @pytest.mark.timeout(300)
    def test_parallel_matches_serial(self, small_matrix_payload, temp_archive_dir):
        """Eight workers reproduce the serial final best of every run exactly."""
        config = ExperimentConfig(**small_matrix_payload)
        serial = run_matrix(config, temp_archive_dir / "serial", workers=1)
        parallel = run_matrix(config, temp_archive_dir / "parallel", workers=8)

        def finals(manifest):
            return {
                (c.cell_id, r.run): r.final_best_value for c in manifest.cells for r in c.runs
            }

        assert finals(serial) == finals(parallel)
        for cell in serial.cells:
            for entry in cell.runs:
                pd.testing.assert_frame_equal(
                    read_history(temp_archive_dir / "serial", entry.file),
                    read_history(temp_archive_dir / "parallel", entry.file),
                )
        assert read_manifest(temp_archive_dir / "parallel").config.workers == 1
