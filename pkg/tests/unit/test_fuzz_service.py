"""
Unit tests for the randomized trials.
"""

import random

import pytest

from relpres.config import Settings
from relpres.core.models import Stable
from relpres.services import fuzz_service
from relpres.fixtures import predefined_diagrams as fx


@pytest.mark.unit
class TestTrials:
    """Test single trials and word generation."""

    def test_random_unimodular_word(self):
        """Test t-count and exponent sum of generated relators."""
        rng = random.Random(3)
        for _ in range(20):
            word = fuzz_service.random_unimodular_word(rng, fx.z3(), 7)
            assert word.t_count % 2 == 1
            assert 1 <= word.t_count <= 7
            assert word.exponent_sum == 1

    def test_word_shapes(self):
        """Test that single stable letters and adjacent stable letters both occur."""
        rng = random.Random(4)
        words = [fuzz_service.random_unimodular_word(rng, fx.z3(), 5) for _ in range(200)]
        assert any(word.t_count == 1 for word in words)
        assert any(
            isinstance(a, Stable) and isinstance(b, Stable)
            for word in words for a, b in zip(word.letters, word.letters[1:])
        )

    def test_no_empty_coefficients(self):
        rng = random.Random(4)
        word = fuzz_service.random_unimodular_word(rng, fx.z3(), 5, empty_rate=0.0)
        assert len(word.letters) == 2 * word.t_count

    def test_gauss_bonnet_trial(self):
        rng = random.Random(11)
        assert all(fuzz_service.gauss_bonnet_trial(rng) is None for _ in range(10))


@pytest.mark.unit
class TestRunFuzz:
    """Test fuzz runs."""

    def test_gauss_bonnet_run(self):
        report = fuzz_service.run_fuzz("gauss-bonnet", 25, seed=1)
        assert report.ok
        assert report.values == {"kind": "gauss-bonnet", "count": 25, "seed": 1, "failures": 0}

    @pytest.mark.slow
    def test_britton_run(self):
        """Test that Britton's verdict matches the free product image."""
        report = fuzz_service.run_fuzz("britton", 40, seed=5)
        assert report.values["failures"] == 0

    @pytest.mark.slow
    def test_rewrite_run_is_reproducible(self):
        first = fuzz_service.run_fuzz("rewrite", 5, seed=2)
        second = fuzz_service.run_fuzz("rewrite", 5, seed=2)
        assert first.codes() == second.codes()
        assert first.values["count"] == 5

    @pytest.mark.property
    @pytest.mark.parametrize("kind,count", [("gauss-bonnet", 1000), ("britton", 1000), ("rewrite", 500)])
    def test_acceptance_runs(self, kind, count):
        """Test the full-size seeded runs that must come back clean."""
        report = fuzz_service.run_fuzz(kind, count, seed=7)
        assert report.values["failures"] == 0
        assert report.ok

    def test_default_seed(self):
        report = fuzz_service.run_fuzz("gauss-bonnet", 2)
        assert report.values["seed"] == Settings.DEFAULT_SEED

    def test_unknown_kind(self):
        with pytest.raises(KeyError):
            fuzz_service.run_fuzz("nope", 1)
