"""Busemann-Hausdorff volume coefficient of a Randers metric."""

import logging
import math
from collections.abc import Sequence
from typing import Optional

import numpy as np

from exprlang.metric import MetricDefinition
from jets import Jet, Scalar, determinant, inverse, log, seed
from riemann.models import AlphaData, BetaInvariants
from utils.errors import RandersConditionError

logger = logging.getLogger(__name__)


def unit_ball_volume(n: int) -> float:
    return math.pi ** (n / 2) / math.gamma(n / 2 + 1)


def unit_sphere_area(n: int) -> float:
    """Area of the unit sphere S^{n-1} in R^n."""
    return 2.0 * math.pi ** (n / 2) / math.gamma(n / 2)


def sigma_bh(alpha: AlphaData, beta: BetaInvariants) -> float:
    """sigma_BH = (1 - b^2)^((n+1)/2) sigma_alpha; the indicatrix is an ellipsoid."""
    if beta.b2 >= 1.0:
        raise RandersConditionError(f"b^2 = {beta.b2:.6g} is not below 1", beta.b2)
    return (1.0 - beta.b2) ** ((alpha.n + 1) / 2) * alpha.sigma_alpha


def log_sigma_bh_gradient(metric: MetricDefinition, x: Sequence[float]) -> np.ndarray:
    """d/dx^m ln sigma_BH from first-order x-jets of the closed form."""
    n = metric.n
    xs = seed(x, range(n), 1)
    a = metric.alpha_matrix(xs)
    b = metric.beta_vector(xs)
    a_inv = inverse(a)
    b2: Scalar = 0.0
    for i in range(n):
        for j in range(n):
            b2 = b2 + b[i] * a_inv[i][j] * b[j]
    value = 0.5 * (n + 1) * log(1.0 - b2) + 0.5 * log(determinant(a))
    if not isinstance(value, Jet):
        return np.zeros(n)
    gradient = np.zeros(n)
    for m in range(n):
        unit = [0] * n
        unit[m] = 1
        gradient[m] = value.partial(tuple(unit))
    return gradient


def sigma_bh_quadrature(
    metric: MetricDefinition,
    x: Sequence[float],
    nodes: int = 2048,
    samples: int = 1_000_000,
    seed_value: Optional[int] = 0,
) -> float:
    """sigma_BH from the volume of {F < 1} = (1/n) integral of F(u)^-n over the unit sphere.

    n = 2 uses the trapezoid rule with ``nodes`` angles, higher dimensions a
    seeded Monte Carlo average over ``samples`` uniform directions.
    """
    a, b, _ = metric.validate_at(x)
    n = metric.n
    if n == 2:
        theta = 2.0 * math.pi * np.arange(nodes) / nodes
        u = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    else:
        rng = np.random.default_rng(seed_value)
        u = rng.standard_normal((samples, n))
        u /= np.linalg.norm(u, axis=1, keepdims=True)
    f = np.sqrt(np.einsum("ki,ij,kj->k", u, a, u)) + u @ b
    volume = unit_sphere_area(n) * float(np.mean(f ** (-float(n)))) / n
    logger.debug(f"indicatrix volume at x={list(x)}: {volume:.12g}")
    return unit_ball_volume(n) / volume
