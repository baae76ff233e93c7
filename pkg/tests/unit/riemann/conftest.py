"""Shared fixtures for alpha-geometry tests."""

import pytest

from exprlang import MetricDefinition, builtin_metric


@pytest.fixture()
def sphere_2d() -> MetricDefinition:
    """Unit sphere in stereographic coordinates, n = 2."""
    return builtin_metric("sphere_alpha", {"n": 2})


@pytest.fixture()
def sphere_3d() -> MetricDefinition:
    """Unit sphere in stereographic coordinates, n = 3."""
    return builtin_metric("sphere_alpha", {"n": 3})
