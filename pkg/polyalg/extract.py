"""Coefficient extraction of homogeneous polynomials from black-box evaluators."""

import itertools
import logging
from collections.abc import Callable, Sequence

import numpy as np

from polyalg.hompoly import HomPoly, monomial_matrix, monomials
from utils.errors import ExtractionError

logger = logging.getLogger(__name__)

Evaluator = Callable[[Sequence[float]], float]

CONDITION_LIMIT = 1e12
HOMOGENEITY_TOLERANCE = 1e-9


def _scaling_points(n: int) -> list[np.ndarray]:
    base = np.array([1.0 + 0.25 * k for k in range(n)])
    return [base, base[::-1] * np.array([(-1.0) ** k for k in range(n)])]


def check_homogeneity(evaluator: Evaluator, n: int, d: int) -> None:
    """f(2y) = 2^d f(y) at two fixed test directions.

    Raises:
        ExtractionError: the evaluator is not homogeneous of degree d
    """
    for y in _scaling_points(n):
        value = evaluator(y)
        scaled = evaluator(2.0 * y)
        expected = 2.0**d * value
        if abs(scaled - expected) > HOMOGENEITY_TOLERANCE * max(abs(scaled), abs(expected), 1e-300):
            raise ExtractionError(
                f"evaluator is not homogeneous of degree {d}: f(2y) = {scaled!r}, 2^d f(y) = {expected!r}"
            )


def principal_lattice(n: int, d: int) -> np.ndarray:
    """The exponent vectors themselves, unisolvent for degree-d forms."""
    return np.array(monomials(n, d), dtype=float)


def cube_grid(n: int, d: int) -> np.ndarray:
    """Every nonzero point of {-d, ..., d}^n in lexicographic order."""
    points = [p for p in itertools.product(range(-d, d + 1), repeat=n) if any(p)]
    return np.array(points, dtype=float)


def _equilibrated(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray, float]:
    scale = np.max(np.abs(matrix), axis=0)
    scaled = matrix / scale
    return scaled, scale, float(np.linalg.cond(scaled))


def extract(evaluator: Evaluator, n: int, d: int) -> HomPoly:
    """Recover the coefficients of a degree-d homogeneous evaluator.

    The square system on the principal lattice is tried first; an
    ill-conditioned one falls back to least squares on the full cube grid.

    Raises:
        ExtractionError: non-homogeneous evaluator or ill-conditioned system
    """
    check_homogeneity(evaluator, n, d)
    points = principal_lattice(n, d)
    matrix, scale, condition = _equilibrated(monomial_matrix(points, n, d))
    if condition <= CONDITION_LIMIT:
        values = np.array([evaluator(p) for p in points])
        return HomPoly.from_vector(n, d, np.linalg.solve(matrix, values) / scale)

    logger.debug(f"lattice system for n={n}, d={d} has condition {condition:.3e}; using the cube grid")
    points = cube_grid(n, d)
    matrix, scale, condition = _equilibrated(monomial_matrix(points, n, d))
    if condition > CONDITION_LIMIT:
        raise ExtractionError(
            f"extraction system for n={n}, d={d} is ill-conditioned", condition
        )
    values = np.array([evaluator(p) for p in points])
    solution, *_ = np.linalg.lstsq(matrix, values, rcond=None)
    return HomPoly.from_vector(n, d, solution / scale)
