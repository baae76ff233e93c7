"""Tests for deterministic directions and points."""

import numpy as np
import pytest

from classify import halton, sample_points, unit_directions
from exprlang import MetricDefinition


class TestHalton:
    """Test the Halton sequence."""

    def test_first_points(self) -> None:
        """Test the leading radical inverses in bases 2 and 3."""
        points = halton(3, 2)
        assert points[:, 0] == pytest.approx([0.5, 0.25, 0.75])
        assert points[:, 1] == pytest.approx([1 / 3, 2 / 3, 1 / 9])

    def test_seed_skips_ahead(self) -> None:
        """Test that seed k starts where seed k - 1 stopped."""
        assert np.array_equal(halton(4, 3, seed=1), halton(8, 3)[4:])

    def test_open_unit_cube(self) -> None:
        """Test that no point touches the boundary."""
        points = halton(200, 4)
        assert np.all(points > 0.0)
        assert np.all(points < 1.0)


class TestUnitDirections:
    """Test the directions on the sphere."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_unit_length(self, n: int) -> None:
        """Test shape and normalization."""
        directions = unit_directions(n, 30)
        assert directions.shape == (30, n)
        assert np.allclose(np.linalg.norm(directions, axis=1), 1.0)

    def test_seeded(self) -> None:
        """Test that equal seeds agree and different seeds differ."""
        assert np.array_equal(unit_directions(3, 10, seed=2), unit_directions(3, 10, seed=2))
        assert not np.allclose(unit_directions(3, 10, seed=2), unit_directions(3, 10, seed=3))


class TestSamplePoints:
    """Test the valid point sampler."""

    def test_points_stay_in_cube(self, example_metric: MetricDefinition) -> None:
        """Test count and the sampling radius."""
        points = sample_points(example_metric, 6, seed=1, radius=0.2, center=(0.1, 0.0))
        assert len(points) == 6
        for x in points:
            assert abs(x[0] - 0.1) <= 0.2
            assert abs(x[1]) <= 0.2

    def test_invalid_draws_are_skipped(self, funk_metric: MetricDefinition) -> None:
        """Test that only points inside the Funk disk are kept."""
        points = sample_points(funk_metric, 10, seed=0, radius=0.95)
        assert len(points) == 10
        assert all(x[0] ** 2 + x[1] ** 2 < 1.0 for x in points)

    def test_deterministic(self, random_metric: MetricDefinition) -> None:
        """Test that a seed fixes the points."""
        assert sample_points(random_metric, 4, seed=7) == sample_points(random_metric, 4, seed=7)
