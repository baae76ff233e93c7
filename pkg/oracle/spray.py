"""Spray coefficients of F straight from the definition, by jets of F^2."""

import logging
from collections.abc import Sequence

import numpy as np

from exprlang.metric import MetricDefinition
from jets import MAX_ORDER, Jet, Scalar, inverse, seed, sqrt
from oracle.models import SprayData
from utils.errors import DegenerateDirectionError

logger = logging.getLogger(__name__)


def _multi_index(nvars: int, *indices: int) -> tuple[int, ...]:
    alpha = [0] * nvars
    for i in indices:
        alpha[i] += 1
    return tuple(alpha)


def _as_jet(v: Scalar, like: Jet) -> Jet:
    return v if isinstance(v, Jet) else Jet.constant(like.space, float(v))


def check_point(metric: MetricDefinition, x: Sequence[float], y: Sequence[float]) -> None:
    """Reject invalid metric points and zero directions before any jet work."""
    if len(x) != metric.n or len(y) != metric.n:
        raise DegenerateDirectionError(
            f"x and y must have {metric.n} components, got {len(x)} and {len(y)}"
        )
    metric.validate_at(x)
    if not any(float(v) != 0.0 for v in y):
        raise DegenerateDirectionError("direction y is zero")


def f_squared(
    metric: MetricDefinition,
    x: Sequence[float],
    y: Sequence[float],
    order: int,
    lead_order: int = MAX_ORDER,
) -> tuple[Jet, list[Scalar]]:
    """F^2 as a jet in the 2n variables (x, y), x first.

    Returns:
        The F^2 jet and the seeded y variables
    """
    n = metric.n
    variables = seed(
        [*map(float, x), *map(float, y)],
        range(2 * n),
        order,
        lead=n,
        lead_order=lead_order,
    )
    xs, ys = variables[:n], variables[n:]
    a = metric.alpha_matrix(xs)
    b = metric.beta_vector(xs)
    alpha2: Scalar = 0.0
    beta: Scalar = 0.0
    for i in range(n):
        beta = beta + b[i] * ys[i]
        for j in range(n):
            alpha2 = alpha2 + a[i][j] * ys[i] * ys[j]
    f = sqrt(alpha2) + beta
    return _as_jet(f * f, ys[0]), ys


def spray_jets(f2: Jet, ys: Sequence[Scalar], n: int) -> list[Jet]:
    """G^k = 1/4 g^{kl}([F^2]_{x^m y^l} y^m - [F^2]_{x^l}) as jets."""
    fy = [f2.derivative(n + l) for l in range(n)]
    g = [[fy[k].derivative(n + l) * 0.5 for l in range(n)] for k in range(n)]
    rhs: list[Scalar] = []
    for l in range(n):
        total: Scalar = f2.derivative(l) * -1.0
        for m in range(n):
            total = total + fy[l].derivative(m) * ys[m]
        rhs.append(total)
    g_inv = inverse(g)
    spray: list[Jet] = []
    for k in range(n):
        total = 0.0
        for l in range(n):
            total = total + g_inv[k][l] * rhs[l]
        spray.append(_as_jet(total * 0.25, f2))
    return spray


def spray(metric: MetricDefinition, x: Sequence[float], y: Sequence[float]) -> SprayData:
    """Spray coefficients with first and second derivatives at (x, y).

    Raises:
        InputError: invalid metric point or zero direction
    """
    check_point(metric, x, y)
    n = metric.n
    f2, ys = f_squared(metric, x, y, 4)
    jets = spray_jets(f2, ys, n)
    m = 2 * n
    G = np.array([g.value for g in jets])
    Gx = np.array([[g.partial(_multi_index(m, k)) for k in range(n)] for g in jets])
    Gy = np.array([[g.partial(_multi_index(m, n + k)) for k in range(n)] for g in jets])
    Gxy = np.array(
        [
            [[g.partial(_multi_index(m, j, n + k)) for k in range(n)] for j in range(n)]
            for g in jets
        ]
    )
    Gyy = np.array(
        [
            [
                [g.partial(_multi_index(m, n + j, n + k)) for k in range(n)]
                for j in range(n)
            ]
            for g in jets
        ]
    )
    return SprayData(
        tuple(map(float, x)), tuple(map(float, y)), G, Gx, Gy, Gxy, Gyy
    )


def spray_values(metric: MetricDefinition, x: Sequence[float], y: Sequence[float]) -> np.ndarray:
    """G^i(x, y) alone, from order-2 jets of F^2."""
    f2, ys = f_squared(metric, x, y, 2)
    return np.array([g.value for g in spray_jets(f2, ys, metric.n)])
