"""S-curvature and the distortion along geodesics."""

import logging
from collections.abc import Sequence

import numpy as np

from exprlang.metric import MetricDefinition
from jets import Jet, seed, value_of
from oracle.geodesic import integrate_geodesic
from oracle.spray import spray
from randers.tensors import distortion
from randers.volume import log_sigma_bh_gradient, sigma_bh
from riemann.alpha import alpha_at
from riemann.beta import beta_invariants
from riemann.contraction import contract_at
from riemann.models import AlphaData, BetaInvariants

logger = logging.getLogger(__name__)


def s_curvature(metric: MetricDefinition, x: Sequence[float], y: Sequence[float]) -> float:
    """S = dG^m/dy^m - y^m d/dx^m ln sigma_BH.

    Raises:
        InputError: invalid point or direction
    """
    spray_data = spray(metric, x, y)
    gradient = log_sigma_bh_gradient(metric, x)
    return float(np.trace(spray_data.Gy) - np.asarray(y, dtype=float) @ gradient)


def s_coefficients(s_value: float, f_value: float, n: int) -> tuple[float, float]:
    """(c, c') with S = (n+1) c F and S = (n-1) c' F."""
    return s_value / ((n + 1) * f_value), s_value / ((n - 1) * f_value)


def distortion_at(metric: MetricDefinition, x: Sequence[float], y: Sequence[float]) -> float:
    alpha = alpha_at(metric, x)
    beta = beta_invariants(metric, x, alpha)
    ctx = contract_at(alpha, beta, [float(v) for v in y])
    return value_of(distortion(ctx, sigma_bh(alpha, beta)))


def distortion_gradient(
    alpha: AlphaData, beta: BetaInvariants, y: Sequence[float]
) -> np.ndarray:
    """tau_{y^i} from first-order y-jets; equals the mean Cartan torsion."""
    n = alpha.n
    ctx = contract_at(alpha, beta, seed(y, range(n), 1))
    tau = distortion(ctx, sigma_bh(alpha, beta))
    gradient = np.zeros(n)
    if isinstance(tau, Jet):
        for i in range(n):
            unit = [0] * n
            unit[i] = 1
            gradient[i] = tau.partial(tuple(unit))
    return gradient


def s_curvature_along_geodesic(
    metric: MetricDefinition,
    x: Sequence[float],
    y: Sequence[float],
    step: float = 1e-3,
    steps: int = 16,
) -> float:
    """S as the rate of change of tau along the geodesic through (x, y).

    Central difference over geodesic segments of parameter length ``step``.
    """
    ahead = integrate_geodesic(metric, x, y, step, steps)
    behind = integrate_geodesic(metric, x, y, -step, steps)
    slope = (distortion_at(metric, *ahead) - distortion_at(metric, *behind)) / (2.0 * step)
    logger.debug(f"geodesic distortion slope at x={list(x)}: {slope:.10g}")
    return slope
