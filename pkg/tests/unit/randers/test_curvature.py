"""Tests for closed Ricci, scalar and S-curvature against the oracles."""

import numpy as np
import pytest

from exprlang import MetricDefinition, builtin_metric
from jets import value_of
from oracle import definitional_curvature
from randers import (
    curvature_report,
    gamma_decomposition,
    gamma_from_scalar,
    ricci_closed,
    ricci_pieces,
    ricci_tensor_semi,
    s_coefficients,
    s_curvature,
    s_curvature_along_geodesic,
    scalar_curvature_closed,
    scalar_curvature_pieces,
    scalar_curvature_semi,
    semi_gamma,
    xi_decomposition,
)
from randers.terms import SIGMA_1_PRINTED, SIGMA_2_PRINTED, evaluate_table
from tests.unit.randers.test_randers_constants import (
    DIRECTION_2D,
    DIRECTION_3D,
    EXAMPLE_POINT,
    EXPECTED_S_OVER_F,
    IDENTITY_TOLERANCE,
    POINT_2D,
    POINT_3D,
    ROUTE_CASES,
    ROUTE_TOLERANCE,
)


def relative(actual: float, expected: float) -> float:
    return abs(actual - expected) / (1.0 + abs(expected))


def scaled_error(actual: float, expected: float) -> float:
    return abs(actual - expected) / max(abs(expected), abs(actual), 1.0)


def case_point(n: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    return (POINT_2D, DIRECTION_2D) if n == 2 else (POINT_3D, DIRECTION_3D)


class TestRicci:
    """Test the closed Ricci curvature."""

    def test_matches_definition_2d(self, random_metric: MetricDefinition, point_data) -> None:
        """Test ricci_closed against the spray definition in the plane."""
        alpha, beta, ctx = point_data(random_metric, POINT_2D, DIRECTION_2D)
        oracle = definitional_curvature(random_metric, POINT_2D, DIRECTION_2D)
        assert relative(value_of(ricci_closed(alpha, beta, ctx)), oracle.ric) < ROUTE_TOLERANCE

    def test_matches_definition_3d(self, random_metric_3d: MetricDefinition, point_data) -> None:
        """Test ricci_closed against the spray definition in dimension three."""
        alpha, beta, ctx = point_data(random_metric_3d, POINT_3D, DIRECTION_3D)
        oracle = definitional_curvature(random_metric_3d, POINT_3D, DIRECTION_3D)
        assert relative(value_of(ricci_closed(alpha, beta, ctx)), oracle.ric) < ROUTE_TOLERANCE

    def test_funk_is_einstein(self, funk_metric: MetricDefinition, point_data) -> None:
        """Test Ric = -(n - 1) F^2 / 4 through the closed formula."""
        alpha, beta, ctx = point_data(funk_metric, POINT_2D, DIRECTION_2D)
        F = value_of(ctx.F)
        assert value_of(ricci_closed(alpha, beta, ctx)) == pytest.approx(-0.25 * F**2, rel=1e-9)

    def test_xi_parts(self, random_metric: MetricDefinition, point_data) -> None:
        """Test that the Xi parts add up."""
        _, _, ctx = point_data(random_metric, POINT_2D, DIRECTION_2D)
        xi = xi_decomposition(ctx)
        assert value_of(xi.xi) == pytest.approx(
            value_of(xi.xi1) + value_of(xi.xi2) + value_of(xi.xi3), abs=1e-14
        )

    def test_tensor_contracts_to_ricci(self, random_metric: MetricDefinition, point_data) -> None:
        """Test Ric_ij y^i y^j = Ric from the y-Hessian."""
        alpha, beta, ctx = point_data(random_metric, POINT_2D, DIRECTION_2D)
        y = np.array(DIRECTION_2D)
        tensor = ricci_tensor_semi(alpha, beta, ctx)
        assert y @ tensor @ y == pytest.approx(value_of(ricci_closed(alpha, beta, ctx)), rel=1e-10)


class TestScalarCurvature:
    """Test the scalar curvature routes."""

    def test_semi_matches_definition(self, random_metric_3d: MetricDefinition, point_data) -> None:
        """Test r_semi against g^ij Ric_ij from the definition."""
        alpha, beta, ctx = point_data(random_metric_3d, POINT_3D, DIRECTION_3D)
        oracle = definitional_curvature(random_metric_3d, POINT_3D, DIRECTION_3D)
        assert relative(scalar_curvature_semi(alpha, beta, ctx), oracle.r) < ROUTE_TOLERANCE

    def test_riemannian_reduction(self, point_data) -> None:
        """Test that beta = 0 reduces both routes to r_alpha."""
        metric = builtin_metric("sphere_alpha", {"n": 3})
        alpha, beta, ctx = point_data(metric, POINT_3D, DIRECTION_3D)
        assert scalar_curvature_semi(alpha, beta, ctx) == pytest.approx(6.0, abs=1e-7)
        assert value_of(scalar_curvature_closed(alpha, beta, ctx)) == pytest.approx(6.0, abs=1e-7)

    def test_gamma_identity(self, random_metric_3d: MetricDefinition, point_data) -> None:
        """Test 4F^5 r_closed = Gamma1 + alpha Gamma2."""
        alpha, beta, ctx = point_data(random_metric_3d, POINT_3D, DIRECTION_3D)
        gamma = gamma_decomposition(alpha, beta, ctx)
        F, a = value_of(ctx.F), value_of(ctx.alpha)
        lhs = 4.0 * F**5 * value_of(scalar_curvature_closed(alpha, beta, ctx))
        rhs = gamma.gamma_1 + a * gamma.gamma_2
        assert abs(lhs - rhs) <= IDENTITY_TOLERANCE * max(abs(lhs), abs(rhs), 1.0)

    def test_gamma_from_parity(self) -> None:
        """Test the parity split on a synthetic odd/even pair."""
        alpha_value, gamma_1, gamma_2 = 1.3, 0.7, -2.1
        f_plus, f_minus = 1.5, 1.1
        r_plus = (gamma_1 + alpha_value * gamma_2) / (4.0 * f_plus**5)
        r_minus = (-gamma_1 + alpha_value * gamma_2) / (4.0 * f_minus**5)
        split = gamma_from_scalar(f_plus, r_plus, f_minus, r_minus, alpha_value)
        assert split == pytest.approx((gamma_1, gamma_2))


class TestScalarRoutes:
    """Test the closed, piece and semi-closed routes on the same metrics."""

    @pytest.mark.parametrize(("family", "params"), ROUTE_CASES)
    def test_closed_matches_definition(self, family: str, params: dict, point_data) -> None:
        """Test r_closed against g^ij Ric_ij from the spray definition."""
        metric = builtin_metric(family, params)
        x, y = case_point(metric.n)
        alpha, beta, ctx = point_data(metric, x, y)
        oracle = definitional_curvature(metric, x, y)
        assert relative(value_of(scalar_curvature_closed(alpha, beta, ctx)), oracle.r) < ROUTE_TOLERANCE

    @pytest.mark.parametrize(("family", "params"), ROUTE_CASES)
    def test_closed_matches_semi(self, family: str, params: dict, point_data) -> None:
        """Test that the Sigma polynomials agree with the y-Hessian route."""
        metric = builtin_metric(family, params)
        alpha, beta, ctx = point_data(metric, *case_point(metric.n))
        r_semi = scalar_curvature_semi(alpha, beta, ctx)
        assert relative(value_of(scalar_curvature_closed(alpha, beta, ctx)), r_semi) < ROUTE_TOLERANCE

    @pytest.mark.parametrize(("family", "params"), ROUTE_CASES)
    def test_pieces_match_semi(self, family: str, params: dict, point_data) -> None:
        """Test the table-free contraction of the Ricci pieces."""
        metric = builtin_metric(family, params)
        alpha, beta, ctx = point_data(metric, *case_point(metric.n))
        r_semi = scalar_curvature_semi(alpha, beta, ctx)
        assert relative(value_of(scalar_curvature_pieces(alpha, beta, ctx)), r_semi) < ROUTE_TOLERANCE

    @pytest.mark.parametrize(("family", "params"), ROUTE_CASES)
    def test_gamma_matches_semi(self, family: str, params: dict, point_data) -> None:
        """Test the Gamma tables against the parity split of the semi-closed r."""
        metric = builtin_metric(family, params)
        alpha, beta, ctx = point_data(metric, *case_point(metric.n))
        gamma = gamma_decomposition(alpha, beta, ctx)
        reference_1, reference_2 = semi_gamma(alpha, beta, ctx)
        assert scaled_error(gamma.gamma_1, reference_1) < ROUTE_TOLERANCE
        assert scaled_error(gamma.gamma_2, reference_2) < ROUTE_TOLERANCE

    @pytest.mark.parametrize("n", [2, 3])
    def test_funk_constant(self, n: int, point_data) -> None:
        """Test r = -n(n - 1)/4 for the Funk metric."""
        metric = builtin_metric("funk", {"n": n})
        alpha, beta, ctx = point_data(metric, *case_point(n))
        expected = -n * (n - 1) / 4.0
        assert value_of(scalar_curvature_closed(alpha, beta, ctx)) == pytest.approx(expected, rel=1e-8)
        assert value_of(scalar_curvature_pieces(alpha, beta, ctx)) == pytest.approx(expected, rel=1e-8)

    def test_printed_sigma_misses_funk(self, funk_metric: MetricDefinition, point_data) -> None:
        """Test that the uncorrected Sigma tables give a wrong Funk curvature."""
        alpha, beta, ctx = point_data(funk_metric, POINT_2D, DIRECTION_2D)
        symbols = ctx.symbols()
        F, a = value_of(ctx.F), value_of(ctx.alpha)
        sigma_1 = value_of(evaluate_table(SIGMA_1_PRINTED, symbols, 2, ctx.b2))
        sigma_2 = value_of(evaluate_table(SIGMA_2_PRINTED, symbols, 2, ctx.b2))
        printed = a / F * alpha.r_alpha + (sigma_1 + a * sigma_2) / (4.0 * F**5)
        assert abs(printed + 0.5) > 1e-3

    def test_pieces_sum_to_ricci(self, random_metric_3d: MetricDefinition, point_data) -> None:
        """Test ^alpha Ric + E + (n - 1)(Xi1 + Xi2 + Xi3) = Ric."""
        alpha, beta, ctx = point_data(random_metric_3d, POINT_3D, DIRECTION_3D)
        total = sum(value_of(p.value) for p in ricci_pieces(ctx).values())
        assert total == pytest.approx(value_of(ricci_closed(alpha, beta, ctx)), rel=1e-10)


class TestSCurvature:
    """Test the S-curvature."""

    def test_isotropic_family(self, example_metric: MetricDefinition) -> None:
        """Test S = 3 <a, x> F with a = (1, 0) at x = (0.3, 0.4)."""
        s_value = s_curvature(example_metric, EXAMPLE_POINT, DIRECTION_2D)
        F = example_metric.finsler_norm(EXAMPLE_POINT, DIRECTION_2D)
        assert s_value / F == pytest.approx(EXPECTED_S_OVER_F, rel=1e-8)
        c, c_prime = s_coefficients(s_value, F, 2)
        assert c == pytest.approx(0.3, rel=1e-8)
        assert c_prime == pytest.approx(0.9, rel=1e-8)

    def test_minkowski_has_zero_s(self, minkowski_metric: MetricDefinition) -> None:
        """Test S = 0 for a Minkowski space."""
        assert abs(s_curvature(minkowski_metric, POINT_2D, DIRECTION_2D)) < 1e-12

    def test_riemannian_has_zero_s(self) -> None:
        """Test S = 0 when beta = 0."""
        metric = builtin_metric("sphere_alpha", {"n": 3})
        assert abs(s_curvature(metric, POINT_3D, DIRECTION_3D)) < 1e-10

    def test_geodesic_rate_of_distortion(self, random_metric: MetricDefinition) -> None:
        """Test that S is the rate of change of tau along the geodesic."""
        direct = s_curvature(random_metric, POINT_2D, DIRECTION_2D)
        along = s_curvature_along_geodesic(random_metric, POINT_2D, DIRECTION_2D)
        assert along == pytest.approx(direct, rel=1e-4, abs=1e-6)


class TestCurvatureReport:
    """Test the pointwise report."""

    def test_report_fields(self, example_metric: MetricDefinition) -> None:
        """Test that the report carries consistent values and serializes."""
        report = curvature_report(example_metric, EXAMPLE_POINT, DIRECTION_2D)
        assert report.s_curvature / report.F == pytest.approx(EXPECTED_S_OVER_F, rel=1e-8)
        assert relative(report.r_semi, report.r_definitional) < ROUTE_TOLERANCE
        data = report.to_dict()
        assert list(data)[:3] == ["x", "y", "F"]
        assert data["gamma"]["gamma_1"] == report.gamma.gamma_1

    def test_report_without_definition(self, random_metric: MetricDefinition) -> None:
        """Test that the definitional route can be skipped."""
        report = curvature_report(random_metric, POINT_2D, DIRECTION_2D, definitional=False)
        assert report.r_definitional is None
        assert np.linalg.eigvalsh(report.g)[0] > 0.0
