"""Scalar curvature of a Randers metric: closed route, semi-closed route and Gamma split.

The closed route is r = (alpha/F) r_alpha + (Sigma1 + alpha Sigma2) / (4F^5)
with the corrected Sigma tables. ``scalar_curvature_pieces`` reaches the same
r without any table, contracting Ric_ij = 1/2 Ric_{y^i y^j} with

    g^ij = (alpha/F) a^ij + ((b^2 alpha + beta)/F^3) y^i y^j - (alpha/F^2)(b^i y^j + b^j y^i)

which, for Ric homogeneous of degree two, leaves

    r = (alpha/2F) Lap Ric + ((b^2 alpha + beta)/F^3) Ric - (alpha/F^2) b^i Ric_{.i}

with Lap the a-Laplacian in y. Every piece of Ric is N / F^m for a polynomial
N in (alpha, y), so only Lap N and b^i N_{.i} are needed; they are written out
below through the beta invariants.
"""

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from jets import Jet, Scalar, seed, value_of
from randers.ricci import ricci_closed
from randers.tensors import inverse_metric
from randers.terms import (
    GAMMA_1,
    GAMMA_1_PRINTED,
    GAMMA_2,
    GAMMA_2_PRINTED,
    SIGMA_1,
    SIGMA_2,
    e_substituted,
    evaluate_table,
)
from riemann.contraction import contract_at
from riemann.models import AlphaData, BetaInvariants, EvalContext

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GammaDecomposition:
    """4F^5 r = Gamma1 + alpha Gamma2, Gamma1 of degree 5 and Gamma2 of degree 4 in y.

    ``gamma_1``/``gamma_2`` come from the corrected Gamma tables, the
    ``*_printed`` values from the tables as printed.
    """

    gamma_1: float
    gamma_2: float
    gamma_1_printed: float
    gamma_2_printed: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "gamma_1": self.gamma_1,
            "gamma_2": self.gamma_2,
            "gamma_1_printed": self.gamma_1_printed,
            "gamma_2_printed": self.gamma_2_printed,
        }


@dataclass(frozen=True)
class _Piece:
    """A function of y with its a-Laplacian and its derivative along b."""

    value: Scalar
    laplacian: Scalar
    along_b: Scalar


def _over_power(
    ctx: EvalContext, numerator: _Piece, degree: int, power: int, factor: float
) -> _Piece:
    """factor * N / F^power for N homogeneous of ``degree`` in y."""
    alpha, F, beta = ctx.alpha, ctx.F, ctx.beta
    m = float(power)
    # <grad N, grad F> by Euler's relation for the alpha part
    grad_n_grad_f = degree * numerator.value / alpha + numerator.along_b
    grad_f_squared = 1.0 + 2.0 * beta / alpha + ctx.b2
    f_along_b = beta / alpha + ctx.b2
    f_m = F**power
    laplacian = (
        numerator.laplacian / f_m
        - 2.0 * m * grad_n_grad_f / (f_m * F)
        - m * (ctx.n - 1) * numerator.value / (alpha * f_m * F)
        + m * (m + 1.0) * numerator.value * grad_f_squared / (f_m * F * F)
    )
    along_b = numerator.along_b / f_m - m * numerator.value * f_along_b / (f_m * F)
    return _Piece(
        factor * numerator.value / f_m, factor * laplacian, factor * along_b
    )


def _alpha_ricci(ctx: EvalContext) -> _Piece:
    return _Piece(ctx.ric_00, 2.0 * ctx.r_alpha, 2.0 * ctx.ric_b0)


def _e_part(ctx: EvalContext) -> _Piece:
    """E = 2 alpha s^m_{0;m} - 2 t_00 - alpha^2 t^m_m."""
    alpha, beta, n = ctx.alpha, ctx.beta, ctx.n
    value = 2.0 * alpha * ctx.s_m0m - 2.0 * ctx.t_00 - ctx.alpha2 * ctx.t_mm
    laplacian = 2.0 * (n + 1) * ctx.s_m0m / alpha - (2.0 * n + 4.0) * ctx.t_mm
    along_b = (
        2.0 * beta * ctx.s_m0m / alpha
        + 2.0 * alpha * ctx.bs_imm
        - 4.0 * ctx.t_0
        - 2.0 * beta * ctx.t_mm
    )
    return _Piece(value, laplacian, along_b)


def _d_numerator(ctx: EvalContext) -> _Piece:
    """D = alpha q_00 - alpha^2 t_0."""
    alpha, beta, n = ctx.alpha, ctx.beta, ctx.n
    value = alpha * ctx.q_00 - ctx.alpha2 * ctx.t_0
    laplacian = 2.0 * alpha * ctx.q_mm + (n + 3) * ctx.q_00 / alpha - (2.0 * n + 4.0) * ctx.t_0
    along_b = (
        beta * ctx.q_00 / alpha
        + alpha * ctx.q_00i_b
        - 2.0 * beta * ctx.t_0
        - ctx.alpha2 * ctx.t
    )
    return _Piece(value, laplacian, along_b)


def _a_squared_numerator(ctx: EvalContext) -> _Piece:
    """A^2 with A = r_00 - 2 alpha s_0."""
    alpha, beta, n = ctx.alpha, ctx.beta, ctx.n
    A = ctx.r_00 - 2.0 * alpha * ctx.s_0
    laplacian_a = 2.0 * ctx.r_mm - 2.0 * (n + 1) * ctx.s_0 / alpha
    grad_a_squared = (
        4.0 * ctx.w_00
        - 8.0 * ctx.s_0 * ctx.r_00 / alpha
        - 8.0 * alpha * ctx.p_0
        + 12.0 * ctx.s_0 * ctx.s_0
        - 4.0 * ctx.alpha2 * ctx.t
    )
    a_along_b = 2.0 * ctx.r_0 - 2.0 * beta * ctx.s_0 / alpha
    return _Piece(A * A, 2.0 * A * laplacian_a + 2.0 * grad_a_squared, 2.0 * A * a_along_b)


def _b_numerator(ctx: EvalContext) -> _Piece:
    """B = r_00;0 - 2 alpha s_0;0."""
    alpha, beta, n = ctx.alpha, ctx.beta, ctx.n
    value = ctx.r_000 - 2.0 * alpha * ctx.s_00
    laplacian = (
        2.0 * ctx.r_mm0
        + 4.0 * ctx.r_0mm
        - 4.0 * alpha * ctx.s_mm
        - 2.0 * (n + 3) * ctx.s_00 / alpha
    )
    along_b = ctx.r_000i_b - 2.0 * beta * ctx.s_00 / alpha - 2.0 * alpha * ctx.s_000i_b
    return _Piece(value, laplacian, along_b)


def ricci_pieces(ctx: EvalContext) -> dict[str, _Piece]:
    """Ric split as ^alpha Ric + E + (n - 1)(Xi1 + Xi2 + Xi3)."""
    weight = float(ctx.n - 1)
    return {
        "alpha_ricci": _alpha_ricci(ctx),
        "e": _e_part(ctx),
        "xi1": _over_power(ctx, _d_numerator(ctx), 3, 1, 2.0 * weight),
        "xi2": _over_power(ctx, _a_squared_numerator(ctx), 4, 2, 0.75 * weight),
        "xi3": _over_power(ctx, _b_numerator(ctx), 3, 1, -0.5 * weight),
    }


def scalar_curvature_pieces(
    alpha: AlphaData, beta: BetaInvariants, ctx: EvalContext
) -> Scalar:
    """r = g^ij Ric_ij assembled from the closed Laplacians of the Ricci pieces."""
    pieces = ricci_pieces(ctx).values()
    ric = sum((p.value for p in pieces), 0.0)
    laplacian = sum((p.laplacian for p in pieces), 0.0)
    along_b = sum((p.along_b for p in pieces), 0.0)
    a, F = ctx.alpha, ctx.F
    return (
        a / (2.0 * F) * laplacian
        + (ctx.b2 * a + ctx.beta) / F**3 * ric
        - a / (F * F) * along_b
    )


def sigma_polynomials(ctx: EvalContext) -> tuple[Scalar, Scalar]:
    symbols = ctx.symbols()
    return (
        evaluate_table(SIGMA_1, symbols, ctx.n, ctx.b2),
        evaluate_table(SIGMA_2, symbols, ctx.n, ctx.b2),
    )


def scalar_curvature_closed(
    alpha: AlphaData, beta: BetaInvariants, ctx: EvalContext
) -> Scalar:
    """r = (alpha/F) r_alpha + (Sigma1 + alpha Sigma2) / (4F^5)."""
    sigma_1, sigma_2 = sigma_polynomials(ctx)
    F = ctx.F
    return ctx.alpha / F * alpha.r_alpha + (sigma_1 + ctx.alpha * sigma_2) / (4.0 * F**5)


def r_alpha_parts(
    alpha2: float, beta_value: float, r_alpha: float
) -> tuple[float, float]:
    """Odd and even (over alpha) parts of 4F^4 alpha r_alpha."""
    odd = 16.0 * r_alpha * (alpha2 * alpha2 * beta_value + alpha2 * beta_value**3)
    even = 4.0 * r_alpha * (alpha2 * alpha2 + 6.0 * alpha2 * beta_value**2 + beta_value**4)
    return odd, even


def gamma_from_scalar(
    f_plus: float, r_plus: float, f_minus: float, r_minus: float, alpha_value: float
) -> tuple[float, float]:
    """Gamma1, Gamma2 from r at y and -y.

    Gamma1 is odd and alpha Gamma2 even under y -> -y, so the parity parts of
    4F^5 r separate them without any transcription.
    """
    plus = 4.0 * f_plus**5 * r_plus
    minus = 4.0 * f_minus**5 * r_minus
    return 0.5 * (plus - minus), 0.5 * (plus + minus) / alpha_value


def _mirror(alpha: AlphaData, beta: BetaInvariants, ctx: EvalContext) -> EvalContext:
    return contract_at(alpha, beta, [-value_of(v) for v in ctx.y])


def gamma_decomposition(
    alpha: AlphaData, beta: BetaInvariants, ctx: EvalContext
) -> GammaDecomposition:
    symbols = e_substituted(ctx.symbols())
    n, b2 = ctx.n, ctx.b2
    return GammaDecomposition(
        value_of(evaluate_table(GAMMA_1, symbols, n, b2)),
        value_of(evaluate_table(GAMMA_2, symbols, n, b2)),
        value_of(evaluate_table(GAMMA_1_PRINTED, symbols, n, b2)),
        value_of(evaluate_table(GAMMA_2_PRINTED, symbols, n, b2)),
    )


def _y_jets(ctx: EvalContext) -> list[Scalar]:
    y = [value_of(v) for v in ctx.y]
    return seed(y, range(ctx.n), 2)


def ricci_tensor_semi(alpha: AlphaData, beta: BetaInvariants, ctx: EvalContext) -> np.ndarray:
    """Ric_ij = 1/2 Ric_{y^i y^j} from second-order y-jets of the closed Ricci curvature."""
    n = ctx.n
    jet_ctx = contract_at(alpha, beta, _y_jets(ctx))
    ric = ricci_closed(alpha, beta, jet_ctx)
    tensor = np.zeros((n, n))
    if not isinstance(ric, Jet):
        return tensor
    for i in range(n):
        for j in range(i, n):
            index = [0] * n
            index[i] += 1
            index[j] += 1
            tensor[i, j] = tensor[j, i] = 0.5 * ric.partial(tuple(index))
    return tensor


def scalar_curvature_semi(
    alpha: AlphaData, beta: BetaInvariants, ctx: EvalContext
) -> float:
    """r = g^{ij} Ric_ij without the Sigma polynomials."""
    g_inv = inverse_metric(ctx, beta)
    return float(np.einsum("ij,ij->", g_inv, ricci_tensor_semi(alpha, beta, ctx)))


def semi_gamma(
    alpha: AlphaData, beta: BetaInvariants, ctx: EvalContext
) -> tuple[float, float]:
    """(Gamma1, Gamma2) from the semi-closed r at y and -y."""
    mirror = _mirror(alpha, beta, ctx)
    return gamma_from_scalar(
        value_of(ctx.F),
        scalar_curvature_semi(alpha, beta, ctx),
        value_of(mirror.F),
        scalar_curvature_semi(alpha, beta, mirror),
        value_of(ctx.alpha),
    )
