from oracle.curvature import (
    DefinitionalCurvature,
    definitional_curvature,
    fundamental_tensor_def,
    ricci_def,
    ricci_tensor_def,
    riemann_curvature,
    scalar_curvature_def,
)
from oracle.geodesic import integrate_geodesic
from oracle.models import SprayData
from oracle.spray import f_squared, spray, spray_jets, spray_values

__all__ = [
    "DefinitionalCurvature",
    "SprayData",
    "definitional_curvature",
    "f_squared",
    "fundamental_tensor_def",
    "integrate_geodesic",
    "ricci_def",
    "ricci_tensor_def",
    "riemann_curvature",
    "scalar_curvature_def",
    "spray",
    "spray_jets",
    "spray_values",
]
