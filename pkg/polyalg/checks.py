"""Divisibility of Gamma2 beta - Gamma1 + 18(n - 1)(1 - b^2) beta e_00^2 by alpha^2 - beta^2."""

import logging
from collections.abc import Sequence
from typing import Literal, Optional

import numpy as np

from exprlang.metric import MetricDefinition
from jets import value_of
from polyalg.division import DivisionResult, divide_by_quadratic
from polyalg.extract import extract
from polyalg.hompoly import HomPoly
from randers.scalar import gamma_decomposition, semi_gamma
from randers.terms import GAMMA_1_PRINTED, e_substituted
from riemann.alpha import alpha_at
from riemann.beta import beta_invariants
from riemann.contraction import contract_at
from riemann.models import AlphaData, BetaInvariants

logger = logging.getLogger(__name__)

Route = Literal["semi", "closed"]

# e_00^2 beta, the last Gamma1 term
MUTATED_TERM = GAMMA_1_PRINTED[-1]


def e_squared_coefficient(n: int, b2: float, printed: bool = False) -> float:
    """Coefficient k of k beta e_00^2 that makes the combination divisible.

    The printed identity has 18(1 - b^2), which agrees with k only for n = 2.
    ``printed`` returns that value instead.
    """
    if printed:
        return 18.0 * (1.0 - b2)
    return 18.0 * (n - 1) * (1.0 - b2)


def alpha_beta_form(beta: BetaInvariants, alpha: AlphaData) -> HomPoly:
    """alpha^2 - beta^2 as the quadratic form a_ij - b_i b_j."""
    return HomPoly.from_quadratic(alpha.a - np.outer(beta.b, beta.b))


def gamma_pair(
    alpha: AlphaData, beta: BetaInvariants, y: Sequence[float], route: Route
) -> tuple[float, float]:
    """(Gamma1, Gamma2) at y from the closed or the semi-closed scalar curvature."""
    ctx = contract_at(alpha, beta, y)
    if route == "closed":
        gamma = gamma_decomposition(alpha, beta, ctx)
        return gamma.gamma_1, gamma.gamma_2
    return semi_gamma(alpha, beta, ctx)


def check_eq_4_6(
    metric: MetricDefinition,
    x: Sequence[float],
    route: Route = "semi",
    mutation: float = 0.0,
    tolerance: Optional[float] = None,
    printed_coefficient: bool = False,
) -> DivisionResult:
    """Extract P = Gamma2 beta - Gamma1 + 18(n - 1)(1 - b^2) beta e_00^2 and divide it by alpha^2 - beta^2.

    The quotient holds the numeric coefficients of K_000. ``mutation`` adds
    that fraction of the e_00^2 beta term of Gamma1, which must break
    divisibility whenever e_00 does not vanish. ``printed_coefficient`` uses
    18(1 - b^2) in place of 18(n - 1)(1 - b^2).

    Raises:
        InputError: invalid metric point
        ExtractionError: P is not recoverable as a quintic form
    """
    alpha = alpha_at(metric, x)
    beta = beta_invariants(metric, x, alpha)
    n = metric.n
    k = e_squared_coefficient(n, beta.b2, printed_coefficient)

    def evaluator(y: Sequence[float]) -> float:
        y = [float(v) for v in y]
        ctx = contract_at(alpha, beta, y)
        gamma_1, gamma_2 = gamma_pair(alpha, beta, y, route)
        if mutation:
            symbols = e_substituted(ctx.symbols())
            gamma_1 += mutation * value_of(MUTATED_TERM.evaluate(symbols, n, beta.b2))
        b_0, e_00 = value_of(ctx.beta), value_of(ctx.e_00)
        return gamma_2 * b_0 - gamma_1 + k * b_0 * e_00 * e_00

    p = extract(evaluator, n, 5)
    result = divide_by_quadratic(p, alpha_beta_form(beta, alpha), tolerance)
    logger.debug(
        f"divisibility at x={list(x)} ({route}, mutation={mutation}): "
        f"relative residual {result.relative_residual:.3e}"
    )
    return result
