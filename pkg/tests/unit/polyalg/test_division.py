"""Tests for division by quadratic forms and the Gamma divisibility check."""

import numpy as np
import pytest

from exprlang import MetricDefinition, builtin_metric
from polyalg import HomPoly, check_eq_4_6, divide_by_quadratic, e_squared_coefficient
from tests.unit.polyalg.test_polyalg_constants import (
    DIVISIBILITY_TOLERANCE,
    EXAMPLE_POINT,
    MUTATION,
    MUTATION_FLOOR,
    RANDOM_POINT_2D,
    RANDOM_POINT_3D,
    RANDOM_POINT_4D,
)


def circle() -> HomPoly:
    return HomPoly.from_quadratic(np.eye(2))


class TestDivideByQuadratic:
    """Test least-squares division."""

    def test_exact_multiple(self) -> None:
        """Test (y1^2 + y2^2)(y1^3 - 2 y1 y2^2) divided by y1^2 + y2^2."""
        quotient = HomPoly(2, 3, {(3, 0): 1.0, (1, 2): -2.0})
        result = divide_by_quadratic(circle() * quotient, circle(), DIVISIBILITY_TOLERANCE)
        assert result.divisible
        np.testing.assert_allclose(result.quotient.as_vector(), quotient.as_vector(), atol=1e-12)

    def test_pure_power_is_not_divisible(self) -> None:
        """Test that y1^5 leaves a residue above 1e-2 of its size."""
        result = divide_by_quadratic(HomPoly(2, 5, {(5, 0): 1.0}), circle(), DIVISIBILITY_TOLERANCE)
        assert not result.divisible
        assert result.relative_residual > 1e-2

    def test_default_tolerance_from_settings(self, settings) -> None:
        """Test that the configured divisibility tolerance is used."""
        result = divide_by_quadratic(circle() * circle(), circle())
        assert result.tolerance == settings.divisibility_tolerance
        assert result.to_dict()["divisible"] is True

    def test_rejects_non_quadratic(self) -> None:
        """Test that the divisor must be a quadratic form."""
        with pytest.raises(ValueError, match="quadratic"):
            divide_by_quadratic(circle(), HomPoly(2, 3, {(3, 0): 1.0}))


class TestGammaDivisibility:
    """Test Gamma2 beta - Gamma1 + 18(n - 1)(1 - b^2) beta e_00^2 modulo alpha^2 - beta^2."""

    def test_example_family(self, example_metric: MetricDefinition) -> None:
        """Test divisibility on the isotropic-S family."""
        result = check_eq_4_6(example_metric, EXAMPLE_POINT, tolerance=DIVISIBILITY_TOLERANCE)
        assert result.divisible
        assert result.quotient.degree == 3

    def test_generic_metric(self, random_metric_3d: MetricDefinition) -> None:
        """Test divisibility on a generic metric in dimension three."""
        result = check_eq_4_6(random_metric_3d, RANDOM_POINT_3D, tolerance=DIVISIBILITY_TOLERANCE)
        assert result.divisible
        assert result.relative_residual < DIVISIBILITY_TOLERANCE

    @pytest.mark.parametrize("route", ["semi", "closed"])
    def test_both_routes_in_3d(self, random_metric_3d: MetricDefinition, route: str) -> None:
        """Test that the closed Gamma tables and the semi-closed split both divide."""
        result = check_eq_4_6(
            random_metric_3d, RANDOM_POINT_3D, route=route, tolerance=DIVISIBILITY_TOLERANCE
        )
        assert result.divisible, result.relative_residual

    def test_generic_metric_4d(self) -> None:
        """Test divisibility with 54(1 - b^2) in dimension four."""
        metric = builtin_metric("random_poly", {"n": 4, "seed": 7})
        result = check_eq_4_6(metric, RANDOM_POINT_4D, tolerance=DIVISIBILITY_TOLERANCE)
        assert result.divisible, result.relative_residual

    def test_printed_coefficient_holds_in_2d(self, random_metric: MetricDefinition) -> None:
        """Test that 18(1 - b^2) suffices in the plane, where n - 1 = 1."""
        result = check_eq_4_6(
            random_metric,
            RANDOM_POINT_2D,
            tolerance=DIVISIBILITY_TOLERANCE,
            printed_coefficient=True,
        )
        assert result.divisible

    def test_printed_coefficient_fails_in_3d(self, random_metric_3d: MetricDefinition) -> None:
        """Test that 18(1 - b^2) leaves a remainder in dimension three."""
        result = check_eq_4_6(
            random_metric_3d,
            RANDOM_POINT_3D,
            tolerance=DIVISIBILITY_TOLERANCE,
            printed_coefficient=True,
        )
        assert not result.divisible
        assert result.relative_residual > MUTATION_FLOOR

    @pytest.mark.parametrize(
        ("n", "b2", "expected"), [(2, 0.25, 13.5), (3, 0.25, 27.0), (4, 0.0, 54.0)]
    )
    def test_e_squared_coefficient(self, n: int, b2: float, expected: float) -> None:
        """Test 18(n - 1)(1 - b^2) and the printed 18(1 - b^2)."""
        assert e_squared_coefficient(n, b2) == pytest.approx(expected)
        assert e_squared_coefficient(n, b2, printed=True) == pytest.approx(18.0 * (1.0 - b2))

    @pytest.mark.parametrize("fixture", ["random_metric", "random_metric_3d"])
    def test_mutation_breaks_divisibility(self, fixture: str, request: pytest.FixtureRequest) -> None:
        """Test that a 1% change of one Gamma1 term breaks a divisible baseline."""
        metric = request.getfixturevalue(fixture)
        x = RANDOM_POINT_2D if metric.n == 2 else RANDOM_POINT_3D
        baseline = check_eq_4_6(metric, x, tolerance=DIVISIBILITY_TOLERANCE)
        mutated = check_eq_4_6(metric, x, mutation=MUTATION, tolerance=DIVISIBILITY_TOLERANCE)
        assert baseline.divisible
        assert not mutated.divisible
        assert mutated.relative_residual > MUTATION_FLOOR

    def test_constant_metric_is_zero(self) -> None:
        """Test that everything vanishes on a Minkowski space."""
        metric = builtin_metric("minkowski_randers", {"n": 2, "b": [0.3, 0.1]})
        result = check_eq_4_6(metric, (0.0, 0.0), tolerance=DIVISIBILITY_TOLERANCE)
        assert result.dividend.max_abs() < 1e-12
        assert result.divisible
