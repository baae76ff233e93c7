"""Tests for the pointwise class tests and their verdicts."""

import numpy as np
import pytest

from classify import (
    Verdict,
    check_lemma_2_1,
    check_weak_isotropy_structure,
    fit_weak_einstein,
    fit_weakly_isotropic_r,
    test_isotropic_S,
    verdict_for,
)
from config.settings import Settings
from exprlang import MetricDefinition
from tests.unit.classify.test_classify_constants import (
    EXAMPLE_POINT,
    EXPECTED_C,
    EXPECTED_C_PRIME,
    EXPECTED_MU,
    FIT_TOLERANCE,
    FUNK_MU,
    LEMMA_FACTOR_2D,
    LEMMA_FACTOR_3D,
    SECOND_POINT,
    SMALL_SAMPLES,
)
from utils.errors import InvalidParameterError


class TestVerdictBand:
    """Test the three-state verdict."""

    def test_below_tolerance_holds(self, settings: Settings) -> None:
        """Test that a residual under the tolerance holds."""
        assert verdict_for(1e-8, 1e-6, settings) is Verdict.HOLDS

    def test_band_is_inconclusive(self, settings: Settings) -> None:
        """Test the gap between the holds and fails tolerances."""
        assert verdict_for(1e-4, 1e-6, settings) is Verdict.INCONCLUSIVE

    def test_large_residual_fails(self, settings: Settings) -> None:
        """Test that a residual over the fails tolerance fails."""
        assert verdict_for(1e-2, 1e-6, settings) is Verdict.FAILS

    def test_loose_tolerance_widens_fails_bound(self, settings: Settings) -> None:
        """Test that a tolerance above the fails bound raises it."""
        assert verdict_for(0.5, 1.0, settings) is Verdict.HOLDS
        assert verdict_for(1.5, 1.0, settings) is Verdict.FAILS


class TestIsotropicS:
    """Test the isotropic S-curvature test."""

    def test_example_holds(self, example_metric: MetricDefinition) -> None:
        """Test c = <a, x> and c' = 3c in the plane."""
        result = test_isotropic_S(example_metric, EXAMPLE_POINT)
        assert result.holds
        assert result.parameters["c"] == pytest.approx(EXPECTED_C, rel=1e-9)
        assert result.parameters["c_prime"] == pytest.approx(EXPECTED_C_PRIME, rel=1e-9)

    def test_funk_has_half(self, funk_metric: MetricDefinition) -> None:
        """Test that the Funk metric has c = 1/2 everywhere."""
        for x in (EXAMPLE_POINT, SECOND_POINT):
            result = test_isotropic_S(funk_metric, x)
            assert result.holds
            assert result.parameters["c"] == pytest.approx(0.5, rel=1e-9)

    def test_constant_one_form_has_zero(self, minkowski_metric: MetricDefinition) -> None:
        """Test that a parallel one-form gives c = 0."""
        result = test_isotropic_S(minkowski_metric, SECOND_POINT)
        assert result.holds
        assert result.parameters["c"] == 0.0

    def test_sine_one_form_fails(self, sine_metric: MetricDefinition) -> None:
        """Test that a non-Killing, non-conformal one-form is rejected."""
        result = test_isotropic_S(sine_metric, (0.1, 0.2))
        assert result.verdict is Verdict.FAILS
        assert result.residual > 1e-3

    def test_result_serializes(self, example_metric: MetricDefinition) -> None:
        """Test the report dictionary."""
        data = test_isotropic_S(example_metric, EXAMPLE_POINT).to_dict()
        assert data["test"] == "isotropic_s"
        assert data["verdict"] == "holds"
        assert data["holds"] is True
        assert data["x"] == list(EXAMPLE_POINT)


class TestWeaklyIsotropicR:
    """Test the weakly isotropic scalar curvature fit."""

    def test_sphere_is_constant(self, sphere_metric: MetricDefinition) -> None:
        """Test r = 2 on the round sphere: theta = 0, mu = 1."""
        result = fit_weakly_isotropic_r(sphere_metric, SECOND_POINT, samples=SMALL_SAMPLES)
        assert result.holds
        assert result.parameters["mu"] == pytest.approx(1.0, rel=1e-8)
        assert np.allclose(result.parameters["theta"], 0.0, atol=1e-8)
        assert result.parameters["is_isotropic"] is True
        assert result.samples == SMALL_SAMPLES

    def test_funk_is_constant(self, funk_metric: MetricDefinition) -> None:
        """Test r = -n(n - 1)/4 for the Funk metric."""
        result = fit_weakly_isotropic_r(funk_metric, SECOND_POINT, samples=SMALL_SAMPLES)
        assert result.holds
        assert result.parameters["mu"] == pytest.approx(FUNK_MU, rel=1e-7)

    def test_example_parameters(self, example_metric: MetricDefinition) -> None:
        """Test theta = (9/4) a and mu = 3<a,x>^2 - 2|a|^2|x|^2."""
        result = fit_weakly_isotropic_r(example_metric, EXAMPLE_POINT)
        assert result.holds
        assert result.parameters["theta"] == pytest.approx([LEMMA_FACTOR_2D, 0.0], abs=FIT_TOLERANCE)
        assert result.parameters["mu"] == pytest.approx(EXPECTED_MU, abs=FIT_TOLERANCE)
        assert result.parameters["is_isotropic"] is False

    def test_minkowski_is_flat(self, minkowski_metric: MetricDefinition) -> None:
        """Test that zero scalar curvature fits with zero parameters."""
        result = fit_weakly_isotropic_r(minkowski_metric, SECOND_POINT, samples=SMALL_SAMPLES)
        assert result.holds
        assert result.parameters["mu"] == pytest.approx(0.0, abs=1e-10)

    def test_too_few_directions(self, example_metric: MetricDefinition) -> None:
        """Test that fewer than 3(n + 1) directions are rejected."""
        with pytest.raises(InvalidParameterError, match="at least 9"):
            fit_weakly_isotropic_r(example_metric, EXAMPLE_POINT, samples=5)

    def test_explicit_directions(self, sphere_metric: MetricDefinition) -> None:
        """Test that caller-supplied directions are used as given."""
        angles = np.linspace(0.0, np.pi, 9, endpoint=False)
        directions = np.stack([np.cos(angles), np.sin(angles)], axis=1)
        result = fit_weakly_isotropic_r(sphere_metric, SECOND_POINT, directions=directions)
        assert result.samples == 9
        assert result.holds

    def test_same_seed_is_deterministic(self, random_metric: MetricDefinition) -> None:
        """Test that a fixed seed reproduces the fit exactly."""
        first = fit_weakly_isotropic_r(random_metric, SECOND_POINT, samples=SMALL_SAMPLES, seed=4)
        second = fit_weakly_isotropic_r(random_metric, SECOND_POINT, samples=SMALL_SAMPLES, seed=4)
        assert first.to_dict() == second.to_dict()


class TestWeakEinstein:
    """Test the weak Einstein fit and the coefficient relation."""

    def test_example_parameters(self, example_metric: MetricDefinition) -> None:
        """Test xi = a and the same mu as the scalar curvature."""
        result = fit_weak_einstein(example_metric, EXAMPLE_POINT)
        assert result.holds
        assert result.parameters["xi"] == pytest.approx([1.0, 0.0], abs=FIT_TOLERANCE)
        assert result.parameters["mu"] == pytest.approx(EXPECTED_MU, abs=FIT_TOLERANCE)

    def test_funk_is_einstein(self, funk_metric: MetricDefinition) -> None:
        """Test xi = 0 and mu = -1/4 for the Funk metric."""
        result = fit_weak_einstein(funk_metric, EXAMPLE_POINT, samples=SMALL_SAMPLES)
        assert result.holds
        assert result.parameters["is_einstein"] is True
        assert result.parameters["mu"] == pytest.approx(FUNK_MU, rel=1e-7)

    def test_lemma_coefficient_2d(self, example_metric: MetricDefinition) -> None:
        """Test theta = (9/4) xi in the plane."""
        result = check_lemma_2_1(example_metric, EXAMPLE_POINT)
        assert result.holds
        assert result.parameters["factor"] == LEMMA_FACTOR_2D
        assert result.parameters["einstein_verdict"] == "holds"

    def test_lemma_coefficient_3d(self, example_metric_3d: MetricDefinition) -> None:
        """Test theta = 2 xi in dimension three."""
        result = check_lemma_2_1(example_metric_3d, (0.2, 0.1, -0.1))
        assert result.holds
        assert result.parameters["factor"] == LEMMA_FACTOR_3D

    def test_lemma_without_einstein_is_inconclusive(self, random_metric: MetricDefinition) -> None:
        """Test that the coefficient relation is not judged for a non-Einstein metric."""
        result = check_lemma_2_1(random_metric, SECOND_POINT, samples=SMALL_SAMPLES)
        assert result.verdict is Verdict.INCONCLUSIVE
        assert result.note == "weak Einstein fit does not hold"


class TestWeakIsotropyStructure:
    """Test the Gamma1/Gamma2 structure of weakly isotropic scalar curvature."""

    def test_example_structure(self, example_metric: MetricDefinition) -> None:
        """Test that the fitted (theta, mu) reproduce both Gamma parts."""
        result = check_weak_isotropy_structure(example_metric, EXAMPLE_POINT)
        assert result.holds
        assert result.parameters["pi_identity"] < 1e-10
        assert result.parameters["gamma_deviation"] < 1e-6

    def test_sphere_structure(self, sphere_metric: MetricDefinition) -> None:
        """Test the structure in the Riemannian case."""
        result = check_weak_isotropy_structure(sphere_metric, SECOND_POINT, samples=SMALL_SAMPLES)
        assert result.holds
