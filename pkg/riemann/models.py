"""Pointwise data of the Riemannian part alpha and the 1-form beta."""

from dataclasses import dataclass
from typing import Any

import numpy as np

from jets import Scalar


@dataclass(frozen=True)
class AlphaData:
    """alpha-geometry at a point x.

    Array conventions: ``da[k, i, j] = d_k a_ij``, ``dda[k, l, i, j] = d_k d_l a_ij``,
    ``gamma[k, i, j] = Gamma^k_ij``, ``dgamma[l, k, i, j] = d_l Gamma^k_ij``.
    """

    x: tuple[float, ...]
    a: np.ndarray
    a_inv: np.ndarray
    da: np.ndarray
    dda: np.ndarray
    gamma: np.ndarray
    dgamma: np.ndarray
    ricci: np.ndarray
    r_alpha: float
    sigma_alpha: float

    @property
    def n(self) -> int:
        return len(self.x)

    def to_dict(self) -> dict[str, Any]:
        return {
            "x": list(self.x),
            "a": self.a.tolist(),
            "ricci": self.ricci.tolist(),
            "r_alpha": self.r_alpha,
            "sigma_alpha": self.sigma_alpha,
        }


@dataclass(frozen=True)
class BetaInvariants:
    """The covariant-derivative zoo of beta with respect to alpha at x.

    Index conventions: ``bij[i, j] = b_{i;j}``, ``bijk[i, j, k] = b_{i;j;k}``,
    ``r_cov[i, j, k] = r_{ij;k}``, ``s_cov[i, j, k] = s_{ij;k}``,
    ``s_vec_cov[i, j] = s_{i;j}``; mixed tensors carry the raised index first
    (``s_mixed[i, j] = s^i_j``).
    """

    b: np.ndarray
    b_up: np.ndarray
    b2: float
    bij: np.ndarray
    bijk: np.ndarray
    r: np.ndarray
    s: np.ndarray
    e: np.ndarray
    w: np.ndarray
    t: np.ndarray
    q: np.ndarray
    r_mixed: np.ndarray
    s_mixed: np.ndarray
    t_mixed: np.ndarray
    q_mixed: np.ndarray
    r_vec: np.ndarray
    s_vec: np.ndarray
    t_vec: np.ndarray
    q_vec: np.ndarray
    p_vec: np.ndarray
    s_up: np.ndarray
    r_scalar: float
    t_scalar: float
    r_cov: np.ndarray
    s_cov: np.ndarray
    e_cov: np.ndarray
    s_vec_cov: np.ndarray
    r_trace_cov: np.ndarray
    r_div: np.ndarray
    s_div: np.ndarray
    s_divergence: float
    b_s_div: float
    r_trace: float
    t_trace: float
    q_trace: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "b": self.b.tolist(),
            "b2": self.b2,
            "r": self.r.tolist(),
            "s": self.s.tolist(),
            "e": self.e.tolist(),
            "s_vec": self.s_vec.tolist(),
            "r_scalar": self.r_scalar,
            "t_scalar": self.t_scalar,
        }


@dataclass
class EvalContext:
    """y-contractions at (x, y).

    Entries are floats when y is real and jets when y is seeded as jets.
    Suffix ``0`` means contraction with y, e.g. ``r_000`` is r_{00;0} and
    ``q_00i_b`` is q_{00.i} b^i (a y-derivative contracted with b^i).
    """

    n: int
    y: tuple[Scalar, ...]
    y_lower: tuple[Scalar, ...]
    alpha2: Scalar
    alpha: Scalar
    beta: Scalar
    F: Scalar
    s_ratio: Scalar
    b2: float
    a: np.ndarray
    a_inv: np.ndarray
    b: np.ndarray
    b_up: np.ndarray
    r_00: Scalar
    s_0: Scalar
    e_00: Scalar
    q_00: Scalar
    t_00: Scalar
    w_00: Scalar
    t_0: Scalar
    r_0: Scalar
    p_0: Scalar
    r_000: Scalar
    s_00: Scalar
    e_000: Scalar
    s_m0m: Scalar
    r_mm0: Scalar
    r_0mm: Scalar
    ric_00: Scalar
    ric_b0: Scalar
    q_00i_b: Scalar
    r_000i_b: Scalar
    s_000i_b: Scalar
    # y-independent scalars carried along for the closed formulas
    t_mm: float = 0.0
    q_mm: float = 0.0
    r_mm: float = 0.0
    s_mm: float = 0.0
    bs_imm: float = 0.0
    t: float = 0.0
    r_alpha: float = 0.0

    def symbols(self) -> dict[str, Scalar]:
        """Symbol table consumed by the term tables of the closed formulas."""
        return {
            "alpha2": self.alpha2,
            "beta": self.beta,
            "b2": self.b2,
            "t_mm": self.t_mm,
            "q_mm": self.q_mm,
            "r_mm": self.r_mm,
            "s_mm": self.s_mm,
            "bs_imm": self.bs_imm,
            "t": self.t,
            "r_alpha": self.r_alpha,
            "ric": self.ric_00,
            "ric_b0": self.ric_b0,
            "s_m0m": self.s_m0m,
            "t_0": self.t_0,
            "s_0": self.s_0,
            "r_0": self.r_0,
            "p_0": self.p_0,
            "q_00": self.q_00,
            "t_00": self.t_00,
            "w_00": self.w_00,
            "r_00": self.r_00,
            "e_00": self.e_00,
            "s_00": self.s_00,
            "r_000": self.r_000,
            "e_000": self.e_000,
            "r_mm0": self.r_mm0,
            "r_0mm": self.r_0mm,
            "q_00i_b": self.q_00i_b,
            "r_000i_b": self.r_000i_b,
            "s_000i_b": self.s_000i_b,
        }
