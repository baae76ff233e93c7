"""Conformal scaling F -> exp(sigma) F and the S-curvature relation it induces."""

import logging
from collections.abc import Sequence
from typing import Optional

import numpy as np

from classify.isotropy import classification_result
from classify.models import ClassificationResult, ConformalSpec
from config.settings import get_settings
from exprlang.metric import MetricDefinition
from exprlang.nodes import BinaryOp, Call, Constant
from exprlang.parser import parse_expression
from jets import Jet, seed, value_of
from randers.scurvature import s_curvature
from randers.tensors import inverse_metric, mean_cartan
from riemann.alpha import alpha_at
from riemann.beta import beta_invariants
from riemann.contraction import contract_at
from utils.errors import ConsistencyError

logger = logging.getLogger(__name__)


def conformal_scale(metric: MetricDefinition, sigma_text: str) -> ConformalSpec:
    """a -> exp(2 sigma) a and b -> exp(sigma) b, so alpha + beta -> exp(sigma)(alpha + beta).

    Raises:
        ExpressionSyntaxError, UnknownIdentifierError: sigma does not parse over x
    """
    sigma = parse_expression(sigma_text, metric.n, metric.params.keys())
    weight_2 = Call("exp", BinaryOp("*", Constant(2.0), sigma))
    weight_1 = Call("exp", sigma)
    upper = tuple(tuple(BinaryOp("*", weight_2, a) for a in row) for row in metric.alpha_upper)
    beta = tuple(BinaryOp("*", weight_1, b) for b in metric.beta)
    scaled = MetricDefinition(
        metric.n,
        upper,
        beta,
        dict(metric.params),
        metric.domain_note,
        f"conformal({metric.source}; sigma={sigma_text})",
    )
    return ConformalSpec(metric, sigma, scaled)


def sigma_gradient(spec: ConformalSpec, x: Sequence[float]) -> np.ndarray:
    n = spec.base.n
    value = spec.sigma.evaluate(seed(x, range(n), 1), spec.base.params)
    gradient = np.zeros(n)
    if isinstance(value, Jet):
        for m in range(n):
            unit = [0] * n
            unit[m] = 1
            gradient[m] = value.partial(tuple(unit))
    return gradient


def check_norm_invariance(spec: ConformalSpec, x: Sequence[float]) -> float:
    """|beta|_alpha of the scaled metric equals that of the base.

    Raises:
        ConsistencyError: the norms differ by more than 1e-12
    """
    _, _, base_b2 = spec.base.validate_at(x)
    _, _, scaled_b2 = spec.scaled.validate_at(x)
    deviation = abs(np.sqrt(scaled_b2) - np.sqrt(base_b2))
    if deviation > 1e-12:
        raise ConsistencyError(f"conformal scaling changed |beta|_alpha by {deviation:.3e}")
    return deviation


def check_conformal_S(
    spec: ConformalSpec,
    x: Sequence[float],
    y: Sequence[float],
    tolerance: Optional[float] = None,
) -> ClassificationResult:
    """S of the scaled metric equals S + F^2 sigma^r I_r of the base, sigma^r = g^{rm} sigma_{x^m}."""
    tolerance = get_settings().holds_tolerance if tolerance is None else tolerance
    check_norm_invariance(spec, x)
    alpha = alpha_at(spec.base, x)
    beta = beta_invariants(spec.base, x, alpha)
    ctx = contract_at(alpha, beta, [float(v) for v in y])
    sigma_up = inverse_metric(ctx, beta) @ sigma_gradient(spec, x)
    cartan = np.array([value_of(v) for v in mean_cartan(ctx)])
    F = value_of(ctx.F)
    predicted = s_curvature(spec.base, x, y) + F * F * float(sigma_up @ cartan)
    scaled = s_curvature(spec.scaled, x, y)
    residual = abs(scaled - predicted) / (1.0 + abs(scaled))
    return classification_result(
        "conformal_s",
        x,
        residual,
        tolerance,
        1,
        {"s_scaled": scaled, "s_predicted": predicted, "y": [float(v) for v in y]},
    )
