"""Pointwise curvature report of a Randers metric."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from exprlang.metric import MetricDefinition
from jets import value_of
from oracle.curvature import definitional_curvature
from randers.ricci import XiDecomposition, ricci_closed, xi_decomposition
from randers.scalar import (
    GammaDecomposition,
    gamma_decomposition,
    ricci_tensor_semi,
    scalar_curvature_closed,
    sigma_polynomials,
)
from randers.scurvature import s_coefficients, s_curvature
from randers.tensors import check_inverse, distortion, fundamental_tensor, inverse_metric, mean_cartan
from randers.volume import sigma_bh
from riemann.alpha import alpha_at
from riemann.beta import beta_invariants
from riemann.contraction import contract_at
from utils.errors import ConsistencyError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurvatureReport:
    x: tuple[float, ...]
    y: tuple[float, ...]
    F: float
    g: np.ndarray
    g_inv: np.ndarray
    ric: float
    ric_tensor: np.ndarray
    r_closed: float
    r_semi: float
    r_definitional: Optional[float]
    s_curvature: float
    c: float
    c_prime: float
    distortion: float
    sigma_bh: float
    mean_cartan: np.ndarray
    xi: XiDecomposition
    gamma: GammaDecomposition
    sigma_1: float
    sigma_2: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "x": list(self.x),
            "y": list(self.y),
            "F": self.F,
            "g": self.g.tolist(),
            "g_inv": self.g_inv.tolist(),
            "ric": self.ric,
            "ric_tensor": self.ric_tensor.tolist(),
            "r_closed": self.r_closed,
            "r_semi": self.r_semi,
            "r_definitional": self.r_definitional,
            "s_curvature": self.s_curvature,
            "c": self.c,
            "c_prime": self.c_prime,
            "distortion": self.distortion,
            "sigma_bh": self.sigma_bh,
            "mean_cartan": self.mean_cartan.tolist(),
            "xi": self.xi.to_dict(),
            "gamma": self.gamma.to_dict(),
            "sigma_1": self.sigma_1,
            "sigma_2": self.sigma_2,
        }


def curvature_report(
    metric: MetricDefinition,
    x: Sequence[float],
    y: Sequence[float],
    definitional: bool = True,
) -> CurvatureReport:
    """Every closed quantity at (x, y), optionally refereed by the definitional route.

    Raises:
        InputError: invalid metric, point or direction
        ConsistencyError: a pointwise identity fails
    """
    alpha = alpha_at(metric, x)
    beta = beta_invariants(metric, x, alpha)
    ctx = contract_at(alpha, beta, [float(v) for v in y])
    n = metric.n

    g = np.array([[value_of(v) for v in row] for row in fundamental_tensor(ctx)])
    if np.min(np.linalg.eigvalsh(g)) <= 0.0:
        raise ConsistencyError("g_ij is not positive definite")
    g_inv = inverse_metric(ctx, beta)
    check_inverse(g, g_inv)

    ric = value_of(ricci_closed(alpha, beta, ctx))
    ric_tensor = ricci_tensor_semi(alpha, beta, ctx)
    y_arr = np.asarray(y, dtype=float)
    contracted = float(y_arr @ ric_tensor @ y_arr)
    if abs(contracted - ric) > 1e-8 * (1.0 + abs(ric)):
        raise ConsistencyError(f"Ric_ij y^i y^j = {contracted!r} disagrees with Ric = {ric!r}")

    F = value_of(ctx.F)
    r_closed = value_of(scalar_curvature_closed(alpha, beta, ctx))
    r_semi = float(np.einsum("ij,ij->", g_inv, ric_tensor))
    gamma = gamma_decomposition(alpha, beta, ctx)
    lhs = 4.0 * F**5 * r_closed
    rhs = gamma.gamma_1 + value_of(ctx.alpha) * gamma.gamma_2
    if abs(lhs - rhs) > 1e-9 * max(abs(lhs), abs(rhs), 1.0):
        raise ConsistencyError(f"4F^5 r = {lhs!r} but Gamma1 + alpha Gamma2 = {rhs!r}")
    sigma_1, sigma_2 = sigma_polynomials(ctx)

    sigma = sigma_bh(alpha, beta)
    s_value = s_curvature(metric, x, y)
    c, c_prime = s_coefficients(s_value, F, n)
    r_def = definitional_curvature(metric, x, y).r if definitional else None
    logger.debug(f"report at x={list(x)} y={list(y)}: r_closed={r_closed:.12g} r_semi={r_semi:.12g}")
    return CurvatureReport(
        x=tuple(map(float, x)),
        y=tuple(map(float, y)),
        F=F,
        g=g,
        g_inv=g_inv,
        ric=ric,
        ric_tensor=ric_tensor,
        r_closed=r_closed,
        r_semi=r_semi,
        r_definitional=r_def,
        s_curvature=s_value,
        c=c,
        c_prime=c_prime,
        distortion=value_of(distortion(ctx, sigma)),
        sigma_bh=sigma,
        mean_cartan=np.array([value_of(v) for v in mean_cartan(ctx)]),
        xi=xi_decomposition(ctx),
        gamma=gamma,
        sigma_1=value_of(sigma_1),
        sigma_2=value_of(sigma_2),
    )
