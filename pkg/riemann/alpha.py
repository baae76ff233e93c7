"""Riemannian machinery of alpha: Christoffel symbols, curvature, volume."""

import logging
from collections.abc import Sequence

import numpy as np

from exprlang.metric import MetricDefinition
from jets import Jet, Scalar, seed
from riemann.models import AlphaData
from utils.errors import ConsistencyError, InvalidMetricError

logger = logging.getLogger(__name__)


def _unit(n: int, *indices: int) -> tuple[int, ...]:
    alpha = [0] * n
    for i in indices:
        alpha[i] += 1
    return tuple(alpha)


def taylor_data(
    v: Scalar, n: int, order: int = 2
) -> tuple[float, np.ndarray, np.ndarray]:
    """Value, gradient and (for order 2) Hessian of an x-seeded scalar."""
    grad = np.zeros(n)
    hess = np.zeros((n, n))
    if not isinstance(v, Jet):
        return float(v), grad, hess
    for k in range(n):
        grad[k] = v.partial(_unit(n, k))
        if order < 2:
            continue
        for l in range(k, n):
            hess[k, l] = hess[l, k] = v.partial(_unit(n, k, l))
    return v.value, grad, hess


def christoffel(
    a_inv: np.ndarray, da: np.ndarray, dda: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Gamma^k_ij and d_l Gamma^k_ij from a^{-1}, da and dda."""
    t = np.einsum("ilj->lij", da) + np.einsum("jli->lij", da) - da
    gamma = 0.5 * np.einsum("kl,lij->kij", a_inv, t)
    da_inv = -np.einsum("kp,mpq,ql->mkl", a_inv, da, a_inv)
    dt = (
        np.einsum("milj->mlij", dda)
        + np.einsum("mjli->mlij", dda)
        - dda
    )
    dgamma = 0.5 * (
        np.einsum("mkl,lij->mkij", da_inv, t) + np.einsum("kl,mlij->mkij", a_inv, dt)
    )
    return gamma, dgamma


def ricci_from_christoffel(gamma: np.ndarray, dgamma: np.ndarray) -> np.ndarray:
    return (
        np.einsum("mmij->ij", dgamma)
        - np.einsum("jmim->ij", dgamma)
        + np.einsum("mme,eij->ij", gamma, gamma)
        - np.einsum("mje,eim->ij", gamma, gamma)
    )


def alpha_at(metric: MetricDefinition, x: Sequence[float]) -> AlphaData:
    """alpha-geometry of ``metric`` at ``x``.

    Raises:
        InvalidMetricError: a(x) is not positive definite
        ConsistencyError: the inverse or Ricci symmetry checks fail
    """
    n = metric.n
    point = tuple(float(v) for v in x)
    entries = metric.alpha_matrix(seed(point, range(n), 2))
    a = np.zeros((n, n))
    da = np.zeros((n, n, n))
    dda = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(i, n):
            value, grad, hess = taylor_data(entries[i][j], n)
            a[i, j] = a[j, i] = value
            da[:, i, j] = da[:, j, i] = grad
            dda[:, :, i, j] = dda[:, :, j, i] = hess

    eigenvalues = np.linalg.eigvalsh(a)
    if eigenvalues[0] <= 0.0:
        raise InvalidMetricError(
            f"a(x) is not positive definite at x={list(point)}: "
            f"eigenvalue {eigenvalues[0]:.3e}",
            float(eigenvalues[0]),
        )
    a_inv = np.linalg.inv(a)
    if np.max(np.abs(a_inv @ a - np.eye(n))) > 1e-10 * max(1.0, float(np.linalg.cond(a))):
        raise ConsistencyError(f"a^-1 a deviates from the identity at x={list(point)}")

    gamma, dgamma = christoffel(a_inv, da, dda)
    ricci = ricci_from_christoffel(gamma, dgamma)
    scale = max(1.0, float(np.max(np.abs(ricci))))
    if np.max(np.abs(ricci - ricci.T)) > 1e-10 * scale:
        raise ConsistencyError(f"alpha-Ricci tensor is not symmetric at x={list(point)}")
    ricci = 0.5 * (ricci + ricci.T)
    r_alpha = float(np.einsum("ij,ij->", a_inv, ricci))
    sigma_alpha = float(np.sqrt(np.linalg.det(a)))
    logger.debug(f"alpha at x={list(point)}: r_alpha={r_alpha:.6g}")
    return AlphaData(point, a, a_inv, da, dda, gamma, dgamma, ricci, r_alpha, sigma_alpha)


def riemann_tensor(alpha: AlphaData) -> np.ndarray:
    """R[m, i, j, k] = R^m_{ijk}, with b_{i;j;k} - b_{i;k;j} = -b_m R^m_{ijk}.

    The Ricci tensor is the contraction R^m_{ijm}.
    """
    gamma, dgamma = alpha.gamma, alpha.dgamma
    return (
        np.einsum("kmji->mijk", dgamma)
        - np.einsum("jmki->mijk", dgamma)
        + np.einsum("mke,eji->mijk", gamma, gamma)
        - np.einsum("mje,eki->mijk", gamma, gamma)
    )
