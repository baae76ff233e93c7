"""Shared fixtures for closed-formula tests."""

from collections.abc import Callable, Sequence

import pytest

from exprlang import MetricDefinition
from riemann import AlphaData, BetaInvariants, EvalContext, alpha_at, beta_invariants, contract_at

PointData = tuple[AlphaData, BetaInvariants, EvalContext]


@pytest.fixture()
def point_data() -> Callable[[MetricDefinition, Sequence[float], Sequence[float]], PointData]:
    """Factory assembling alpha, beta and the y-contractions at (x, y)."""

    def build(metric: MetricDefinition, x: Sequence[float], y: Sequence[float]) -> PointData:
        alpha = alpha_at(metric, x)
        beta = beta_invariants(metric, x, alpha)
        return alpha, beta, contract_at(alpha, beta, list(y))

    return build
