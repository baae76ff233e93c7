"""Deterministic y-directions and x-points."""

import math
from collections.abc import Sequence
from typing import Optional

import numpy as np

from exprlang.metric import MetricDefinition
from utils.errors import InputError

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19)


def radical_inverse(index: int, base: int) -> float:
    result, fraction = 0.0, 1.0 / base
    while index > 0:
        index, digit = divmod(index, base)
        result += digit * fraction
        fraction /= base
    return result


def halton(count: int, dims: int, seed: int = 0) -> np.ndarray:
    """``count`` Halton points in (0, 1)^dims, skipping the first ``seed * count`` indices."""
    start = 1 + seed * count
    return np.array(
        [[radical_inverse(k, _PRIMES[d]) for d in range(dims)] for k in range(start, start + count)]
    )


def unit_directions(n: int, count: int, seed: int = 0) -> np.ndarray:
    """Low-discrepancy directions on S^{n-1} via Box-Muller on Halton pairs."""
    pairs = (n + 1) // 2
    u = halton(count, 2 * pairs, seed)
    radius = np.sqrt(-2.0 * np.log(u[:, 0::2]))
    angle = 2.0 * math.pi * u[:, 1::2]
    normals = np.concatenate([radius * np.cos(angle), radius * np.sin(angle)], axis=1)[:, :n]
    return normals / np.linalg.norm(normals, axis=1, keepdims=True)


def sample_points(
    metric: MetricDefinition,
    count: int,
    seed: int = 0,
    radius: float = 0.3,
    center: Optional[Sequence[float]] = None,
) -> list[tuple[float, ...]]:
    """Seeded points in a cube around ``center`` where the metric is a valid Randers metric.

    Invalid draws are skipped; at most ``20 * count`` draws are made.
    """
    rng = np.random.default_rng(seed)
    origin = np.zeros(metric.n) if center is None else np.asarray(center, dtype=float)
    points: list[tuple[float, ...]] = []
    for _ in range(20 * count):
        if len(points) == count:
            break
        x = origin + rng.uniform(-radius, radius, metric.n)
        try:
            metric.validate_at(x)
        except InputError:
            continue
        points.append(tuple(float(v) for v in x))
    return points
