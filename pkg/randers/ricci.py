"""Ricci curvature of a Randers metric in closed form."""

from dataclasses import dataclass
from typing import Any

from jets import Scalar, value_of
from riemann.models import AlphaData, BetaInvariants, EvalContext
from utils.errors import ConsistencyError


@dataclass(frozen=True)
class XiDecomposition:
    """Xi = Xi1 + Xi2 + Xi3 with Xi1 = 2D/F, Xi2 = 3A^2/(4F^2), Xi3 = -B/(2F)."""

    A: Scalar
    B: Scalar
    D1: Scalar
    D: Scalar
    xi1: Scalar
    xi2: Scalar
    xi3: Scalar
    xi: Scalar

    def to_dict(self) -> dict[str, Any]:
        return {
            name: value_of(getattr(self, name))
            for name in ("A", "B", "D1", "D", "xi1", "xi2", "xi3", "xi")
        }


def xi_decomposition(ctx: EvalContext) -> XiDecomposition:
    """Split Xi and check it against the undivided expression.

    Raises:
        ConsistencyError: the parts do not add up to Xi within 1e-12
    """
    alpha, F = ctx.alpha, ctx.F
    A = ctx.r_00 - 2.0 * alpha * ctx.s_0
    B = ctx.r_000 - 2.0 * alpha * ctx.s_00
    D1 = ctx.q_00 - alpha * ctx.t_0
    D = alpha * D1
    xi1 = 2.0 * D / F
    xi2 = 0.75 * A * A / (F * F)
    xi3 = -0.5 * B / F
    xi = xi1 + xi2 + xi3

    direct = (
        2.0 * alpha / F * (ctx.q_00 - alpha * ctx.t_0)
        + 3.0 / (4.0 * F * F) * (ctx.r_00 - 2.0 * alpha * ctx.s_0) ** 2
        - 1.0 / (2.0 * F) * (ctx.r_000 - 2.0 * alpha * ctx.s_00)
    )
    scale = abs(value_of(xi1)) + abs(value_of(xi2)) + abs(value_of(xi3))
    if abs(value_of(direct) - value_of(xi)) > 1e-12 * max(scale, 1e-300):
        raise ConsistencyError(
            f"Xi parts {value_of(xi)!r} disagree with Xi {value_of(direct)!r}"
        )
    return XiDecomposition(A, B, D1, D, xi1, xi2, xi3, xi)


def ricci_closed(alpha: AlphaData, beta: BetaInvariants, ctx: EvalContext) -> Scalar:
    """Ric = ^alpha Ric + (2 alpha s^m_{0;m} - 2 t_00 - alpha^2 t^m_m) + (n-1) Xi."""
    xi = xi_decomposition(ctx).xi
    return (
        ctx.ric_00
        + (2.0 * ctx.alpha * ctx.s_m0m - 2.0 * ctx.t_00 - ctx.alpha2 * beta.t_trace)
        + (alpha.n - 1) * xi
    )
