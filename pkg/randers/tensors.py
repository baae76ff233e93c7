"""Closed-form fundamental tensor, its inverse, mean Cartan torsion and distortion."""

import math

import numpy as np

from jets import Scalar, determinant, log, value_of
from riemann.models import BetaInvariants, EvalContext
from utils.errors import ConsistencyError


def inverse_metric(ctx: EvalContext, beta_inv: BetaInvariants) -> np.ndarray:
    """g^{ij} = (alpha/F) a^{ij} - (alpha/F^2)(b^i y^j + b^j y^i) + ((b^2 alpha + beta)/F^3) y^i y^j."""
    alpha = value_of(ctx.alpha)
    beta = value_of(ctx.beta)
    F = alpha + beta
    y = np.array([value_of(v) for v in ctx.y])
    b_up = beta_inv.b_up
    return (
        (alpha / F) * ctx.a_inv
        - (alpha / F**2) * (np.outer(b_up, y) + np.outer(y, b_up))
        + ((beta_inv.b2 * alpha + beta) / F**3) * np.outer(y, y)
    )


def fundamental_tensor(ctx: EvalContext) -> list[list[Scalar]]:
    """g_ij = (F/alpha)(a_ij - y_i y_j/alpha^2) + F_{y^i} F_{y^j}, generic in y."""
    n = ctx.n
    ratio = ctx.F / ctx.alpha
    f_y = [ctx.y_lower[i] / ctx.alpha + float(ctx.b[i]) for i in range(n)]
    g: list[list[Scalar]] = [[0.0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            entry = ratio * (float(ctx.a[i, j]) - ctx.y_lower[i] * ctx.y_lower[j] / ctx.alpha2)
            g[i][j] = g[j][i] = entry + f_y[i] * f_y[j]
    return g


def check_inverse(g: np.ndarray, g_inv: np.ndarray, tolerance: float = 1e-10) -> float:
    """max |g^{ik} g_kj - delta|, raising when above ``tolerance``."""
    deviation = float(np.max(np.abs(g_inv @ g - np.eye(len(g)))))
    if deviation > tolerance:
        raise ConsistencyError(f"g^ik g_kj deviates from the identity by {deviation:.3e}")
    return deviation


def mean_cartan(ctx: EvalContext) -> list[Scalar]:
    """I_i = ((n+1)/(2F))(b_i - beta y_i/alpha^2)."""
    factor = (ctx.n + 1) / (2.0 * ctx.F)
    return [
        factor * (float(ctx.b[i]) - ctx.beta * ctx.y_lower[i] / ctx.alpha2)
        for i in range(ctx.n)
    ]


def distortion(ctx: EvalContext, sigma_bh: float) -> Scalar:
    """tau = ln(sqrt(det g_ij) / sigma_BH)."""
    det_g = determinant(fundamental_tensor(ctx))
    if value_of(det_g) <= 0.0:
        raise ConsistencyError(f"det g is not positive: {value_of(det_g)!r}")
    return 0.5 * log(det_g) - math.log(sigma_bh)
