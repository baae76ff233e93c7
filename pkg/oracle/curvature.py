"""Riemann curvature, Ricci curvature and scalar curvature from the definition.

No Randers-specific formula is used here; these values referee the closed forms.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from config.settings import get_settings
from exprlang.metric import MetricDefinition
from jets import MAX_ORDER, Jet, JetSpace, Scalar
from oracle.models import SprayData
from oracle.spray import check_point, f_squared, spray_jets
from utils.errors import ConsistencyError

logger = logging.getLogger(__name__)

# x-derivatives of F^2 needed by the Ricci tensor
_X_ORDER = 2


@dataclass(frozen=True)
class DefinitionalCurvature:
    """Ric, Ric_ij, g_ij, g^ij and r at one (x, y), all from jets of F^2."""

    ric: float
    ric_tensor: np.ndarray
    g: np.ndarray
    g_inv: np.ndarray
    r: float
    capped: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "ric": self.ric,
            "ric_tensor": self.ric_tensor.tolist(),
            "r": self.r,
            "capped": self.capped,
        }


def riemann_curvature(spray_data: SprayData) -> np.ndarray:
    """R^i_k = 2G^i_{x^k} - G^i_{x^j y^k} y^j + 2G^j G^i_{y^j y^k} - G^i_{y^j} G^j_{y^k}."""
    y = np.asarray(spray_data.y)
    return (
        2.0 * spray_data.Gx
        - np.einsum("ijk,j->ik", spray_data.Gxy, y)
        + 2.0 * np.einsum("j,ijk->ik", spray_data.G, spray_data.Gyy)
        - spray_data.Gy @ spray_data.Gy
    )


def ricci_def(spray_data: SprayData) -> float:
    """Ric = R^m_m."""
    return float(np.trace(riemann_curvature(spray_data)))


def _ricci_jet(spray: list[Jet], ys: Sequence[Scalar], n: int) -> Scalar:
    total: Scalar = 0.0
    for i in range(n):
        g_i = spray[i]
        total = total + g_i.derivative(i) * 2.0
        g_iy = g_i.derivative(n + i)
        for j in range(n):
            total = total - g_iy.derivative(j) * ys[j]
            total = total + spray[j] * g_i.derivative(n + j).derivative(n + i) * 2.0
            total = total - g_i.derivative(n + j) * spray[j].derivative(n + i)
    return total


def _use_capped_pass(n: int, capped: Optional[bool]) -> bool:
    if capped is not None:
        return capped
    size = JetSpace(2 * n, MAX_ORDER).size
    budget = get_settings().jet_budget
    if size > budget:
        logger.debug(f"order-6 F^2 jet has {size} monomials > budget {budget}; capping x-order")
        return True
    return False


def _unit_pair(m: int, i: int, j: int) -> tuple[int, ...]:
    alpha = [0] * m
    alpha[i] += 1
    alpha[j] += 1
    return tuple(alpha)


def definitional_curvature(
    metric: MetricDefinition,
    x: Sequence[float],
    y: Sequence[float],
    capped: Optional[bool] = None,
) -> DefinitionalCurvature:
    """One jet pass over F^2 yielding Ric, Ric_ij and r.

    Args:
        metric: The Finsler metric
        x: Point
        y: Nonzero direction
        capped: Force the one-pass order-6 evaluation (False) or the x-capped
            evaluation (True); by default the configured jet budget decides

    Raises:
        InputError: invalid point or direction
        ConsistencyError: g is singular or Ric_ij y^i y^j disagrees with Ric
    """
    check_point(metric, x, y)
    n = metric.n
    use_cap = _use_capped_pass(n, capped)
    f2, ys = f_squared(metric, x, y, MAX_ORDER, _X_ORDER if use_cap else MAX_ORDER)
    ric = _ricci_jet(spray_jets(f2, ys, n), ys, n)
    m = 2 * n
    hessian = np.zeros((n, n))
    g = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            alpha = _unit_pair(m, n + i, n + j)
            hessian[i, j] = hessian[j, i] = 0.5 * (
                ric.partial(alpha) if isinstance(ric, Jet) else 0.0
            )
            g[i, j] = g[j, i] = 0.5 * f2.partial(alpha)
    ric_value = ric.value if isinstance(ric, Jet) else float(ric)

    y_arr = np.asarray(y, dtype=float)
    contracted = float(y_arr @ hessian @ y_arr)
    if abs(contracted - ric_value) > 1e-8 * (1.0 + abs(ric_value)):
        raise ConsistencyError(
            f"Ric_ij y^i y^j = {contracted!r} disagrees with Ric = {ric_value!r}"
        )
    g_inv = np.linalg.inv(g)
    r = float(np.einsum("ij,ij->", g_inv, hessian))
    return DefinitionalCurvature(ric_value, hessian, g, g_inv, r, use_cap)


def ricci_tensor_def(
    metric: MetricDefinition, x: Sequence[float], y: Sequence[float]
) -> np.ndarray:
    """Ric_ij = 1/2 d^2 Ric / dy^i dy^j."""
    return definitional_curvature(metric, x, y).ric_tensor


def scalar_curvature_def(
    metric: MetricDefinition, x: Sequence[float], y: Sequence[float]
) -> float:
    """r = g^{ij} Ric_ij with g^{ij} by numeric inversion."""
    return definitional_curvature(metric, x, y).r


def fundamental_tensor_def(
    metric: MetricDefinition, x: Sequence[float], y: Sequence[float]
) -> np.ndarray:
    """g_ij = 1/2 [F^2]_{y^i y^j} from order-2 jets."""
    check_point(metric, x, y)
    n = metric.n
    f2, _ = f_squared(metric, x, y, 2)
    g = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            g[i, j] = g[j, i] = 0.5 * f2.partial(_unit_pair(2 * n, n + i, n + j))
    return g
