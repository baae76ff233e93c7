from collections.abc import Generator
from pathlib import Path

import pytest

from config.settings import Settings, reload_settings
from exprlang.builtins import builtin_metric
from exprlang.metric import MetricDefinition
from service_locator import service_locator

METRICS_DIR = Path(__file__).parent.parent / "metrics"


@pytest.fixture(autouse=True)
def _reset_service_locator() -> Generator[None, None, None]:
    """Drop cached settings so environment changes in one test do not leak."""
    service_locator.clear()
    yield
    service_locator.clear()


@pytest.fixture()
def settings() -> Settings:
    """Default settings registered in the service locator."""
    return reload_settings()


@pytest.fixture()
def metrics_dir() -> Path:
    """Return the path to the shipped metric files."""
    return METRICS_DIR


@pytest.fixture()
def minkowski_metric() -> MetricDefinition:
    """Flat alpha with a constant one-form."""
    return builtin_metric("minkowski_randers", {"n": 2, "b": [0.3, -0.2]})


@pytest.fixture()
def example_metric() -> MetricDefinition:
    """Two-dimensional isotropic-S family with a = (1, 0)."""
    return builtin_metric("example_1_1", {"n": 2})


@pytest.fixture()
def funk_metric() -> MetricDefinition:
    """Funk metric on the unit disk."""
    return builtin_metric("funk", {"n": 2})


@pytest.fixture()
def random_metric() -> MetricDefinition:
    """Generic polynomial Randers metric with no special structure."""
    return builtin_metric("random_poly", {"n": 2, "seed": 3})


@pytest.fixture()
def random_metric_3d() -> MetricDefinition:
    """Generic polynomial Randers metric in dimension three."""
    return builtin_metric("random_poly", {"n": 3, "seed": 5})
