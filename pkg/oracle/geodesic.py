"""Geodesics of F by classical Runge-Kutta on x'' + 2G(x, x') = 0."""

from collections.abc import Sequence

import numpy as np

from exprlang.metric import MetricDefinition
from oracle.spray import spray_values


def integrate_geodesic(
    metric: MetricDefinition,
    x: Sequence[float],
    v: Sequence[float],
    duration: float,
    steps: int = 16,
) -> tuple[np.ndarray, np.ndarray]:
    """Position and velocity after ``duration`` (negative runs backwards)."""
    position = np.asarray(x, dtype=float)
    velocity = np.asarray(v, dtype=float)
    h = duration / steps

    def rhs(p: np.ndarray, w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return w, -2.0 * spray_values(metric, p, w)

    for _ in range(steps):
        k1 = rhs(position, velocity)
        k2 = rhs(position + 0.5 * h * k1[0], velocity + 0.5 * h * k1[1])
        k3 = rhs(position + 0.5 * h * k2[0], velocity + 0.5 * h * k2[1])
        k4 = rhs(position + h * k3[0], velocity + h * k3[1])
        position = position + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0])
        velocity = velocity + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])
    return position, velocity
