"""Unit tests for mutant vector construction."""

import numpy as np
import pytest

from src.micro_de.exceptions import InvalidConfigurationError
from src.micro_de.operators.mutation import (
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


class TestFactorMode:
    """Test FactorMode construction and validation."""

    def test_cmf_default_value(self):
        """CMF should default to 0.9."""
        assert FactorMode.cmf().value == 0.9

    def test_random_modes_default_range(self):
        """SRMF and VRMF should default to [0.1, 1.5]."""
        for mode in (FactorMode.srmf(), FactorMode.vrmf()):
            assert (mode.low, mode.high) == (0.1, 1.5)

    @pytest.mark.parametrize("low,high", [(1.0, 1.0), (1.5, 0.1), (-0.1, 1.0)])
    def test_rejects_bad_range(self, low, high):
        """Ranges must satisfy 0 <= lo < hi."""
        with pytest.raises(InvalidConfigurationError):
            FactorMode.vrmf(low, high)

    def test_rejects_negative_constant(self):
        """CMF value must be non-negative."""
        with pytest.raises(InvalidConfigurationError):
            FactorMode.cmf(-0.5)


class TestParsing:
    """Test identifier parsing."""

    @pytest.mark.parametrize("name", ["rand1", "best1", "t2b1", "rand2", "best2"])
    def test_parse_scheme(self, name):
        """Known identifiers should parse to their scheme."""
        assert parse_scheme(name).value == name

    def test_parse_scheme_is_case_insensitive(self):
        """Identifiers should parse regardless of case."""
        assert parse_scheme("BEST1") is MutationScheme.BEST1

    def test_unknown_scheme_lists_choices(self):
        """Unknown schemes should raise and name the valid ones."""
        with pytest.raises(InvalidConfigurationError, match="rand1"):
            parse_scheme("current1")

    def test_parse_factor_mode(self):
        """Mode parsing should carry value and range."""
        mode = parse_factor_mode("vrmf", 0.5, (0.0, 2.0))
        assert mode.kind is FactorKind.VRMF
        assert (mode.low, mode.high) == (0.0, 2.0)

    def test_unknown_mode(self):
        """Unknown modes should raise."""
        with pytest.raises(InvalidConfigurationError):
            parse_factor_mode("adaptive")


class TestSchemePopulation:
    """Test the legal (scheme, N_P) pairs."""

    @pytest.mark.parametrize(
        "scheme,n_p",
        [("best2", 3), ("rand2", 4), ("rand2", 2)],
    )
    def test_illegal_pairs_raise_with_minimum(self, scheme, n_p):
        """Too-small populations should raise and name the minimum N_P."""
        parsed = parse_scheme(scheme)
        with pytest.raises(InvalidConfigurationError, match=str(parsed.min_population)):
            parsed.check_population(n_p)

    @pytest.mark.parametrize(
        "scheme,n_p",
        [("rand1", 2), ("best1", 2), ("t2b1", 2), ("best2", 4), ("rand2", 5)],
    )
    def test_smallest_legal_pairs(self, scheme, n_p):
        """The smallest documented populations should be accepted."""
        parse_scheme(scheme).check_population(n_p)

    def test_rand1_two_members_uses_two_donors(self):
        """DE/Rand/1 at N_P = 2 reads both members."""
        assert MutationScheme.RAND1.donor_count(2) == 2
        assert MutationScheme.RAND1.donor_count(4) == 3


class TestDrawFactor:
    """Test factor draws per mode."""

    def test_cmf_consumes_no_draws(self):
        """CMF should leave the generator untouched."""
        rng = np.random.default_rng(3)
        state = rng.bit_generator.state
        factors = draw_factor(FactorMode.cmf(0.7), 4, rng)
        assert np.all(factors == 0.7)
        assert rng.bit_generator.state == state

    def test_srmf_is_one_scalar(self, rng):
        """SRMF should broadcast one value over every dimension."""
        factors = draw_factor(FactorMode.srmf(), 10, rng)
        assert np.all(factors == factors[0])
        assert 0.1 <= factors[0] <= 1.5

    def test_vrmf_is_per_dimension(self, rng):
        """VRMF should draw D distinct values inside the range."""
        factors = draw_factor(FactorMode.vrmf(), 50, rng)
        assert len(np.unique(factors)) == 50
        assert np.all((factors >= 0.1) & (factors <= 1.5))


class TestSelectDonors:
    """Test donor index selection."""

    def test_excludes_target_when_possible(self, rng):
        """Donors should be distinct and never the target when N_P - 1 >= count."""
        for _ in range(200):
            donors = select_donors(6, 2, 5, rng)
            assert 2 not in donors
            assert len(set(donors.tolist())) == 5

    def test_reduced_form_uses_whole_population(self, rng):
        """With N_P - 1 < count the donors are a permutation of everyone."""
        donors = select_donors(3, 0, 3, rng)
        assert sorted(donors.tolist()) == [0, 1, 2]

    def test_too_many_donors_raise(self, rng):
        """Asking for more donors than members should raise."""
        with pytest.raises(InvalidConfigurationError):
            select_donors(3, 0, 4, rng)


class TestMutant:
    """Test mutant formulas."""

    def test_cmf_zero_returns_base_vector(self, small_population, rng):
        """With F = 0, DE/Best/1 returns X_best."""
        fitness = np.array([3.0, 1.0, 2.0, 4.0])
        config = MutationConfig(MutationScheme.BEST1, FactorMode.cmf(0.0))
        v = mutant(config, small_population, fitness, 0, rng)
        np.testing.assert_array_equal(v, small_population[1])

    def test_rand1_two_members_form(self, rng):
        """At N_P = 2, DE/Rand/1 is X_a + F X_b."""
        x = np.array([[1.0, 2.0], [3.0, 5.0]])
        config = MutationConfig(MutationScheme.RAND1, FactorMode.cmf(0.5))
        v = mutant(config, x, np.array([0.0, 1.0]), 0, rng)
        expected = [x[0] + 0.5 * x[1], x[1] + 0.5 * x[0]]
        assert any(np.allclose(v, e) for e in expected)

    def test_rand1_matches_recorded_donors(self, small_population):
        """DE/Rand/1 should equal X_r1 + F (X_r2 - X_r3) with the drawn donors."""
        config = MutationConfig(MutationScheme.RAND1, FactorMode.cmf(0.8))
        fitness = np.zeros(4)
        v = mutant(config, small_population, fitness, 3, np.random.default_rng(5))
        r1, r2, r3 = np.random.default_rng(5).choice([0, 1, 2], size=3, replace=False)
        expected = small_population[r1] + 0.8 * (small_population[r2] - small_population[r3])
        np.testing.assert_allclose(v, expected)

    def test_target_to_best_uses_target(self, small_population):
        """DE/Target-to-Best/1 with F = 1 lands on X_best plus a difference."""
        fitness = np.array([5.0, 0.0, 2.0, 3.0])
        config = MutationConfig(MutationScheme.TARGET_TO_BEST1, FactorMode.cmf(1.0))
        v = mutant(config, small_population, fitness, 2, np.random.default_rng(9))
        a, b = np.random.default_rng(9).choice([0, 1, 3], size=2, replace=False)
        expected = small_population[1] + (small_population[a] - small_population[b])
        np.testing.assert_allclose(v, expected)

    def test_srmf_mutant_stays_on_line(self):
        """SRMF scales the whole difference vector by one scalar."""
        x = np.array([[0.0, 0.0], [1.0, 1.0], [0.0, 0.0], [0.0, 0.0]])
        config = MutationConfig(MutationScheme.BEST1, FactorMode.srmf(0.1, 1.5))
        for seed in range(20):
            rng = np.random.default_rng(seed)
            v = mutant(config, x, np.array([0.0, 1.0, 1.0, 1.0]), 3, rng)
            assert v[0] == pytest.approx(v[1])

    def test_shared_factor_reuses_draw(self):
        """With shared_factor the two difference terms get the same factor."""
        x = np.array([[0.0], [1.0], [2.0], [4.0], [8.0]])
        shared = MutationConfig(MutationScheme.RAND2, FactorMode.srmf(), shared_factor=True)
        rng = np.random.default_rng(11)
        v = mutant(shared, x, np.zeros(5), 0, rng)

        # N_P = 5 is below the target-excluding form of DE/Rand/2, so all five members are donors
        replay = np.random.default_rng(11)
        d = replay.choice(np.arange(5), size=5, replace=False)
        f = replay.uniform(0.1, 1.5)
        expected = x[d[0]] + f * (x[d[1]] - x[d[2]]) + f * (x[d[3]] - x[d[4]])
        np.testing.assert_allclose(v, expected)

    def test_mutant_rejects_illegal_population(self, small_population, rng):
        """DE/Rand/2 cannot run on four members."""
        config = MutationConfig(MutationScheme.RAND2, FactorMode.cmf())
        with pytest.raises(InvalidConfigurationError):
            mutant(config, small_population, np.zeros(4), 0, rng)
