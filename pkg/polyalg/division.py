"""Divisibility of a homogeneous polynomial by a quadratic form."""

import logging
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from config.settings import get_settings
from polyalg.hompoly import HomPoly, monomials

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DivisionResult:
    """P = Q R + residue; ``residual`` is the max-abs coefficient of the residue."""

    dividend: HomPoly
    quotient: HomPoly
    residual: float
    divisible: bool
    tolerance: float

    @property
    def relative_residual(self) -> float:
        scale = self.dividend.max_abs()
        return self.residual / scale if scale > 0.0 else 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "quotient": self.quotient.to_dict(),
            "residual": self.residual,
            "relative_residual": self.relative_residual,
            "divisible": self.divisible,
            "tolerance": self.tolerance,
        }


def multiplication_matrix(q: HomPoly, degree: int) -> np.ndarray:
    """Columns are the coefficient vectors of q times each degree-``degree`` monomial."""
    target = {alpha: row for row, alpha in enumerate(monomials(q.n, degree + q.degree))}
    sources = monomials(q.n, degree)
    matrix = np.zeros((len(target), len(sources)))
    for column, beta in enumerate(sources):
        for alpha, c in q.coefficients.items():
            matrix[target[tuple(i + j for i, j in zip(alpha, beta))], column] += c
    return matrix


def divide_by_quadratic(
    p: HomPoly, q: HomPoly, tolerance: Optional[float] = None
) -> DivisionResult:
    """Least-squares quotient of p by the quadratic q and the size of what is left."""
    if q.degree != 2 or q.max_abs() == 0.0:
        raise ValueError("divisor must be a nonzero quadratic form")
    if p.degree < 2:
        raise ValueError(f"dividend degree {p.degree} is below 2")
    tolerance = get_settings().divisibility_tolerance if tolerance is None else tolerance
    matrix = multiplication_matrix(q, p.degree - 2)
    target = p.as_vector()
    solution, *_ = np.linalg.lstsq(matrix, target, rcond=None)
    residual = float(np.max(np.abs(target - matrix @ solution)))
    scale = p.max_abs()
    divisible = residual <= tolerance * scale
    logger.debug(f"division of degree-{p.degree} form: residual {residual:.3e}, scale {scale:.3e}")
    return DivisionResult(
        p,
        HomPoly.from_vector(p.n, p.degree - 2, solution),
        residual,
        divisible,
        tolerance,
    )
