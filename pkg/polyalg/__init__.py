from polyalg.checks import alpha_beta_form, check_eq_4_6, e_squared_coefficient, gamma_pair
from polyalg.division import DivisionResult, divide_by_quadratic
from polyalg.extract import check_homogeneity, extract
from polyalg.hompoly import HomPoly, monomials

__all__ = [
    "DivisionResult",
    "HomPoly",
    "alpha_beta_form",
    "check_eq_4_6",
    "check_homogeneity",
    "divide_by_quadratic",
    "e_squared_coefficient",
    "extract",
    "gamma_pair",
    "monomials",
]
