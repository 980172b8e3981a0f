import math

import numpy as np
import pytest

from fanoext import (
    BudgetExceededError,
    DmcSpec,
    EnumerationBudget,
    binary_entropy,
    exact_conditional_entropy,
    exact_mutual_info,
    ext_fano_ub,
    hamming_distance_distribution,
    load_dmc,
    monte_carlo_error_histogram,
    qsc_spec,
)


class TestDmcSpec:
    def test_qsc_identity(self):
        assert qsc_spec(2, 0.0).transition == ((1.0, 0.0), (0.0, 1.0))

    def test_qsc_bsc(self):
        assert qsc_spec(2, 0.1).transition == ((0.9, 0.1), (0.1, 0.9))

    def test_qsc_q7(self):
        spec = qsc_spec(7, 0.001)
        for x, row in enumerate(spec.transition):
            assert row[x] == pytest.approx(0.994)
            assert math.fsum(row) == pytest.approx(1.0, abs=1e-12)

    def test_bad_row_sum(self):
        with pytest.raises(ValueError, match="sums to"):
            DmcSpec(q=2, transition=((0.9, 0.2), (0.1, 0.9)))

    def test_invalid_qsc(self):
        with pytest.raises(ValueError):
            qsc_spec(7, 0.2)

    def test_load_matrix_file(self, tmp_path):
        path = tmp_path / "dmc.txt"
        path.write_text("2\n0.9 0.1\n0.2 0.8\n")
        spec = load_dmc(path)
        assert spec.q == 2
        assert spec.transition == ((0.9, 0.1), (0.2, 0.8))

    def test_load_matrix_bad_shape(self, tmp_path):
        path = tmp_path / "dmc.txt"
        path.write_text("3\n0.9 0.1\n")
        with pytest.raises(ValueError, match="rows"):
            load_dmc(path)


class TestExactEnumeration:
    def test_identity_channel_zero_equivocation(self):
        for n in (1, 2, 3):
            assert exact_conditional_entropy(qsc_spec(3, 0.0), n) == pytest.approx(
                0.0, abs=1e-12
            )

    def test_bsc_single_letter(self):
        assert exact_conditional_entropy(qsc_spec(2, 0.1), 1) == pytest.approx(
            binary_entropy(0.1), abs=1e-12
        )

    def test_identity_channel_full_mi(self):
        assert exact_mutual_info(qsc_spec(3, 0.0), 2) == pytest.approx(
            2 * math.log2(3), abs=1e-12
        )

    def test_useless_bsc_zero_mi(self):
        assert exact_mutual_info(qsc_spec(2, 0.5), 2) == pytest.approx(0.0, abs=1e-12)

    def test_memoryless_factorization(self):
        for q, eps in [(2, 0.1), (3, 0.05), (2, 0.37)]:
            spec = qsc_spec(q, eps)
            h1 = exact_conditional_entropy(spec, 1)
            for n in (2, 3, 4):
                assert exact_conditional_entropy(spec, n) == pytest.approx(
                    n * h1, abs=1e-9
                )

    def test_budget_refusal_names_requirement(self):
        with pytest.raises(BudgetExceededError, match="16"):
            exact_conditional_entropy(qsc_spec(2, 0.1), 2, EnumerationBudget(max_pairs=8))


class TestHammingDistanceDistribution:
    def test_identity(self):
        d = hamming_distance_distribution(qsc_spec(3, 0.0), 3)
        assert d.probs.values == pytest.approx((1.0, 0.0, 0.0, 0.0), abs=1e-15)

    def test_bsc_binomial(self):
        d = hamming_distance_distribution(qsc_spec(2, 0.1), 2)
        assert d.probs.values == pytest.approx((0.81, 0.18, 0.01), abs=1e-12)

    def test_asymmetric_channel_average_crossover(self):
        # uniform input averages the two crossover rates: (0.1 + 0.2)/2 = 0.15
        spec = DmcSpec(q=2, transition=((0.9, 0.1), (0.2, 0.8)))
        d = hamming_distance_distribution(spec, 2)
        p = 0.15
        expected = ((1 - p) ** 2, 2 * p * (1 - p), p**2)
        assert d.probs.values == pytest.approx(expected, abs=1e-12)

    def test_extended_bound_strict_for_asymmetric_channel(self):
        # for a non-symmetric channel the bound is a strict inequality
        spec = DmcSpec(q=2, transition=((0.9, 0.1), (0.2, 0.8)))
        d = hamming_distance_distribution(spec, 2)
        exact = exact_conditional_entropy(spec, 2)
        assert ext_fano_ub(d, 2) > exact + 1e-6


class TestMonteCarlo:
    def test_identity_channel_all_mass_at_zero(self):
        counts = monte_carlo_error_histogram(qsc_spec(2, 0.0), 3, 1000, seed=5)
        assert counts == [1000, 0, 0, 0]

    def test_seed_determinism(self):
        a = monte_carlo_error_histogram(qsc_spec(3, 0.05), 4, 50_000, seed=99)
        b = monte_carlo_error_histogram(qsc_spec(3, 0.05), 4, 50_000, seed=99)
        assert a == b

    def test_chunking_does_not_change_the_stream_totals(self):
        spec = qsc_spec(2, 0.1)
        full = monte_carlo_error_histogram(spec, 2, 30_000, seed=7)
        assert sum(full) == 30_000

    def test_large_n_block_error(self):
        trials = 10**5
        counts = monte_carlo_error_histogram(qsc_spec(7, 0.001), 30, trials, seed=42)
        pb = 1.0 - (1.0 - 0.006) ** 30
        pb_emp = 1.0 - counts[0] / trials
        se = math.sqrt(pb * (1 - pb) / trials)
        assert abs(pb_emp - pb) <= 3 * se

    def test_trials_validated(self):
        with pytest.raises(ValueError):
            monte_carlo_error_histogram(qsc_spec(2, 0.1), 2, 0, seed=1)
