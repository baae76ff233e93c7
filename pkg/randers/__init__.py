from randers.report import CurvatureReport, curvature_report
from randers.ricci import XiDecomposition, ricci_closed, xi_decomposition
from randers.scalar import (
    GammaDecomposition,
    gamma_decomposition,
    gamma_from_scalar,
    ricci_pieces,
    ricci_tensor_semi,
    scalar_curvature_closed,
    scalar_curvature_pieces,
    scalar_curvature_semi,
    semi_gamma,
    sigma_polynomials,
)
from randers.scurvature import (
    distortion_gradient,
    s_coefficients,
    s_curvature,
    s_curvature_along_geodesic,
)
from randers.tensors import (
    check_inverse,
    distortion,
    fundamental_tensor,
    inverse_metric,
    mean_cartan,
)
from randers.termdiff import TermCorrection, TermDiffReport, coefficient_record, term_diff
from randers.volume import (
    log_sigma_bh_gradient,
    sigma_bh,
    sigma_bh_quadrature,
    unit_ball_volume,
)

__all__ = [
    "CurvatureReport",
    "GammaDecomposition",
    "TermCorrection",
    "TermDiffReport",
    "XiDecomposition",
    "check_inverse",
    "coefficient_record",
    "curvature_report",
    "distortion",
    "distortion_gradient",
    "fundamental_tensor",
    "gamma_decomposition",
    "gamma_from_scalar",
    "inverse_metric",
    "log_sigma_bh_gradient",
    "mean_cartan",
    "ricci_closed",
    "ricci_pieces",
    "ricci_tensor_semi",
    "s_coefficients",
    "s_curvature",
    "s_curvature_along_geodesic",
    "scalar_curvature_closed",
    "scalar_curvature_pieces",
    "scalar_curvature_semi",
    "semi_gamma",
    "sigma_bh",
    "sigma_bh_quadrature",
    "sigma_polynomials",
    "term_diff",
    "unit_ball_volume",
    "xi_decomposition",
]
