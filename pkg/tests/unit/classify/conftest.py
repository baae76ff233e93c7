"""Shared fixtures for classification tests."""

import pytest

from classify import ConformalSpec, conformal_scale
from exprlang import MetricDefinition, builtin_metric, parse_metric_text
from tests.unit.classify.test_classify_constants import SINE_ONE_FORM


@pytest.fixture()
def sine_metric() -> MetricDefinition:
    """Euclidean alpha with b = (0.3 sin x2, 0)."""
    return parse_metric_text(SINE_ONE_FORM, "sine")


@pytest.fixture()
def sphere_metric() -> MetricDefinition:
    """Riemannian round sphere in stereographic coordinates."""
    return builtin_metric("sphere_alpha", {"n": 2})


@pytest.fixture()
def example_metric_3d() -> MetricDefinition:
    """Isotropic-S family in dimension three with a = (1, 0, 0)."""
    return builtin_metric("example_1_1", {"n": 3})


@pytest.fixture()
def flat_base() -> MetricDefinition:
    """Minkowski-Randers metric with |b| = 0.3."""
    return builtin_metric("minkowski_randers", {"n": 2, "b": [0.3, 0.0]})


@pytest.fixture()
def conformal_factory(flat_base: MetricDefinition):
    """Scale the flat base metric by exp(sigma)."""

    def build(sigma: str) -> ConformalSpec:
        return conformal_scale(flat_base, sigma)

    return build
