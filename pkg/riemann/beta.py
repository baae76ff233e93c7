"""Covariant derivatives of beta with respect to alpha and their contractions."""

import logging
from collections.abc import Sequence
from typing import Optional

import numpy as np

from exprlang.metric import RANDERS_MARGIN, MetricDefinition
from jets import seed
from riemann.alpha import alpha_at, taylor_data
from riemann.models import AlphaData, BetaInvariants
from utils.errors import ConsistencyError, RandersConditionError

logger = logging.getLogger(__name__)

_IDENTITY_TOLERANCE = 1e-12


def _check(name: str, lhs: float, rhs: float, scale: float) -> None:
    if abs(lhs - rhs) > _IDENTITY_TOLERANCE * max(1.0, scale):
        raise ConsistencyError(f"{name}: {lhs!r} != {rhs!r}")


def beta_invariants(
    metric: MetricDefinition,
    x: Sequence[float],
    alpha: Optional[AlphaData] = None,
) -> BetaInvariants:
    """All covariant-derivative invariants of beta at ``x``.

    Args:
        metric: The Randers metric
        x: Evaluation point
        alpha: Precomputed ``alpha_at(metric, x)``, computed when omitted

    Raises:
        RandersConditionError: 1 - b^2 falls below ``RANDERS_MARGIN``
    """
    if alpha is None:
        alpha = alpha_at(metric, x)
    n = metric.n
    point = alpha.x
    a_inv, gamma, dgamma = alpha.a_inv, alpha.gamma, alpha.dgamma

    b = np.zeros(n)
    db = np.zeros((n, n))  # db[j, i] = d_j b_i
    ddb = np.zeros((n, n, n))  # ddb[k, j, i] = d_k d_j b_i
    for i, entry in enumerate(metric.beta_vector(seed(point, range(n), 2))):
        b[i], db[:, i], ddb[:, :, i] = taylor_data(entry, n)

    b_up = a_inv @ b
    b2 = float(b @ b_up)
    if 1.0 - b2 < RANDERS_MARGIN:
        raise RandersConditionError(
            f"Randers condition fails at x={list(point)}: |beta|_alpha^2 = {b2:.6g}", b2
        )

    bij = db.T - np.einsum("mij,m->ij", gamma, b)
    d_bij = (
        np.einsum("kji->ijk", ddb)
        - np.einsum("kmij,m->ijk", dgamma, b)
        - np.einsum("mij,km->ijk", gamma, db)
    )
    bijk = (
        d_bij
        - np.einsum("mik,mj->ijk", gamma, bij)
        - np.einsum("mjk,im->ijk", gamma, bij)
    )

    r = 0.5 * (bij + bij.T)
    s = 0.5 * (bij - bij.T)
    r_cov = 0.5 * (bijk + bijk.transpose(1, 0, 2))
    s_cov = 0.5 * (bijk - bijk.transpose(1, 0, 2))

    r_mixed = a_inv @ r
    s_mixed = a_inv @ s
    w = r @ r_mixed
    t = s @ s_mixed
    q = r @ s_mixed
    t_mixed = a_inv @ t
    q_mixed = a_inv @ q

    s_vec = b_up @ s
    r_vec = b_up @ r
    t_vec = b_up @ t
    q_vec = b_up @ q
    s_up = a_inv @ s_vec
    p_vec = r @ s_up
    e = r + np.outer(s_vec, b) + np.outer(b, s_vec)

    r_scalar = float(b_up @ r_vec)
    t_scalar = float(b_up @ t_vec)
    _check("r = b^i b^j r_ij", r_scalar, float(np.einsum("i,j,ij->", b_up, b_up, r)), abs(r_scalar))
    _check("t = b^i b^j t_ij", t_scalar, float(np.einsum("i,j,ij->", b_up, b_up, t)), abs(t_scalar))
    t_scale = float(np.max(np.abs(t))) if t.size else 0.0
    if np.max(np.abs(t - t.T)) > 1e-10 * max(1.0, t_scale):
        raise ConsistencyError("t_ij is not symmetric")
    e_rebuilt = 0.5 * (bij + bij.T) + np.einsum("mi,m,j->ij", s, b_up, b) + np.einsum(
        "mj,m,i->ij", s, b_up, b
    )
    if np.max(np.abs(e - e_rebuilt)) > 1e-10 * max(1.0, float(np.max(np.abs(e)))):
        raise ConsistencyError("e_ij does not match r_ij + s_i b_j + s_j b_i")

    # b^m_{;j} = a^{mk} b_{k;j}
    b_up_cov = a_inv @ bij
    s_vec_cov = np.einsum("mj,mi->ij", b_up_cov, s) + np.einsum("m,mij->ij", b_up, s_cov)
    e_cov = (
        r_cov
        + np.einsum("ik,j->ijk", bij, s_vec)
        + np.einsum("i,jk->ijk", b, s_vec_cov)
        + np.einsum("jk,i->ijk", bij, s_vec)
        + np.einsum("j,ik->ijk", b, s_vec_cov)
    )

    r_trace_cov = np.einsum("mi,imk->k", a_inv, r_cov)
    r_div = np.einsum("mj,jkm->k", a_inv, r_cov)
    s_div = np.einsum("mj,jkm->k", a_inv, s_cov)
    s_divergence = float(np.einsum("mk,km->", a_inv, s_vec_cov))

    logger.debug(f"beta at x={list(point)}: b^2={b2:.6g}")
    return BetaInvariants(
        b=b,
        b_up=b_up,
        b2=b2,
        bij=bij,
        bijk=bijk,
        r=r,
        s=s,
        e=e,
        w=w,
        t=t,
        q=q,
        r_mixed=r_mixed,
        s_mixed=s_mixed,
        t_mixed=t_mixed,
        q_mixed=q_mixed,
        r_vec=r_vec,
        s_vec=s_vec,
        t_vec=t_vec,
        q_vec=q_vec,
        p_vec=p_vec,
        s_up=s_up,
        r_scalar=r_scalar,
        t_scalar=t_scalar,
        r_cov=r_cov,
        s_cov=s_cov,
        e_cov=e_cov,
        s_vec_cov=s_vec_cov,
        r_trace_cov=r_trace_cov,
        r_div=r_div,
        s_div=s_div,
        s_divergence=s_divergence,
        b_s_div=float(b_up @ s_div),
        r_trace=float(np.trace(r_mixed)),
        t_trace=float(np.trace(t_mixed)),
        q_trace=float(np.trace(q_mixed)),
    )
