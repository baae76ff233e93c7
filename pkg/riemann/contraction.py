"""y-contractions of the beta invariants at (x, y).

Every function here works on float directions and on jet-seeded directions,
so the closed formulas built on top can be differentiated in y.
"""

import logging
from collections.abc import Sequence

import numpy as np

from jets import Scalar, sqrt, value_of
from riemann.models import AlphaData, BetaInvariants, EvalContext
from utils.errors import ConsistencyError, DegenerateDirectionError

logger = logging.getLogger(__name__)

# directions with alpha(y) below this fraction of |y| are rejected
DEGENERACY_RATIO = 1e-12


def linear(v: np.ndarray, y: Sequence[Scalar]) -> Scalar:
    """v_i y^i."""
    total: Scalar = 0.0
    for c, yi in zip(v.tolist(), y):
        if c != 0.0:
            total = total + c * yi
    return total


def quadratic(m: np.ndarray, y: Sequence[Scalar]) -> Scalar:
    """m_ij y^i y^j."""
    total: Scalar = 0.0
    for row, yi in zip(m, y):
        total = total + yi * linear(row, y)
    return total


def cubic(t: np.ndarray, y: Sequence[Scalar]) -> Scalar:
    """t_ijk y^i y^j y^k."""
    total: Scalar = 0.0
    for block, yi in zip(t, y):
        total = total + yi * quadratic(block, y)
    return total


def _check_identity(name: str, lhs: Scalar, rhs: Scalar, scale: float, tolerance: float) -> None:
    lhs_value, rhs_value = value_of(lhs), value_of(rhs)
    if abs(lhs_value - rhs_value) > tolerance * max(scale, 1e-300):
        raise ConsistencyError(f"{name}: {lhs_value!r} != {rhs_value!r}")


def contract_at(alpha: AlphaData, beta: BetaInvariants, y: Sequence[Scalar]) -> EvalContext:
    """Assemble every y-contraction used by the closed formulas.

    Raises:
        DegenerateDirectionError: y is zero or alpha(y) is numerically zero
        ConsistencyError: the e-substitution identities fail
    """
    n = alpha.n
    if len(y) != n:
        raise DegenerateDirectionError(f"direction has {len(y)} components, expected {n}")
    y = tuple(y)
    y_values = np.array([value_of(v) for v in y])
    y_norm = float(np.linalg.norm(y_values))
    if y_norm == 0.0:
        raise DegenerateDirectionError("direction y is zero")
    alpha2_value = float(y_values @ alpha.a @ y_values)
    if alpha2_value <= 0.0 or np.sqrt(alpha2_value) < DEGENERACY_RATIO * y_norm:
        raise DegenerateDirectionError(f"alpha(y) vanishes numerically for y={y_values.tolist()}")

    alpha2 = quadratic(alpha.a, y)
    alpha_y = sqrt(alpha2)
    beta_y = linear(beta.b, y)
    y_lower = tuple(linear(row, y) for row in alpha.a)

    r_00 = quadratic(beta.r, y)
    s_0 = linear(beta.s_vec, y)
    e_00 = quadratic(beta.e, y)
    s_00 = quadratic(beta.s_vec_cov, y)
    r_000 = cubic(beta.r_cov, y)
    e_000 = cubic(beta.e_cov, y)

    # y-derivatives contracted with b^i
    q_dot = beta.b_up @ (beta.q + beta.q.T)
    r_dot = np.einsum("m,mjk->jk", beta.b_up, beta.r_cov + beta.r_cov.transpose(1, 0, 2))
    r_dot = r_dot + np.einsum("m,ijm->ij", beta.b_up, beta.r_cov)
    s_dot = beta.b_up @ (beta.s_vec_cov + beta.s_vec_cov.T)

    ctx = EvalContext(
        n=n,
        y=y,
        y_lower=y_lower,
        alpha2=alpha2,
        alpha=alpha_y,
        beta=beta_y,
        F=alpha_y + beta_y,
        s_ratio=beta_y / alpha_y,
        b2=beta.b2,
        a=alpha.a,
        a_inv=alpha.a_inv,
        b=beta.b,
        b_up=beta.b_up,
        r_00=r_00,
        s_0=s_0,
        e_00=e_00,
        q_00=quadratic(beta.q, y),
        t_00=quadratic(beta.t, y),
        w_00=quadratic(beta.w, y),
        t_0=linear(beta.t_vec, y),
        r_0=linear(beta.r_vec, y),
        p_0=linear(beta.p_vec, y),
        r_000=r_000,
        s_00=s_00,
        e_000=e_000,
        s_m0m=linear(beta.s_div, y),
        r_mm0=linear(beta.r_trace_cov, y),
        r_0mm=linear(beta.r_div, y),
        ric_00=quadratic(alpha.ricci, y),
        ric_b0=linear(beta.b_up @ alpha.ricci, y),
        q_00i_b=linear(q_dot, y),
        r_000i_b=quadratic(r_dot, y),
        s_000i_b=linear(s_dot, y),
        t_mm=beta.t_trace,
        q_mm=beta.q_trace,
        r_mm=beta.r_trace,
        s_mm=beta.s_divergence,
        bs_imm=beta.b_s_div,
        t=beta.t_scalar,
        r_alpha=alpha.r_alpha,
    )

    beta_s0 = value_of(beta_y) * value_of(s_0)
    _check_identity(
        "r_00 = e_00 - 2 beta s_0",
        r_00,
        e_00 - 2.0 * beta_y * s_0,
        abs(value_of(r_00)) + abs(value_of(e_00)) + 2.0 * abs(beta_s0) + 1e-15 * alpha2_value,
        1e-12,
    )
    correction = beta_y * s_00 + s_0 * e_00 - 2.0 * beta_y * s_0 * s_0
    _check_identity(
        "r_00;0 = e_00;0 - 2(beta s_0;0 + s_0 e_00 - 2 beta s_0^2)",
        r_000,
        e_000 - 2.0 * correction,
        abs(value_of(r_000)) + abs(value_of(e_000)) + 2.0 * abs(value_of(correction))
        + 1e-15 * alpha2_value * y_norm,
        1e-10,
    )
    return ctx
