"""Small dense linear algebra over generic scalars (floats or jets)."""

from collections.abc import Sequence

from jets.functions import value_of
from jets.jet import Scalar
from utils.errors import ConsistencyError

Matrix = list[list[Scalar]]


def _is_zero(v: Scalar) -> bool:
    return isinstance(v, float) and v == 0.0


def _pivot_row(rows: Matrix, column: int) -> int:
    best = max(range(column, len(rows)), key=lambda r: abs(value_of(rows[r][column])))
    if value_of(rows[best][column]) == 0.0:
        raise ConsistencyError("matrix is singular at the expansion point")
    return best


def inverse(matrix: Sequence[Sequence[Scalar]]) -> Matrix:
    """Gauss-Jordan inverse with partial pivoting on the order-0 values."""
    n = len(matrix)
    rows: Matrix = [list(row) for row in matrix]
    inv: Matrix = [[1.0 if i == j else 0.0 for j in range(n)] for i in range(n)]
    for column in range(n):
        pivot = _pivot_row(rows, column)
        rows[column], rows[pivot] = rows[pivot], rows[column]
        inv[column], inv[pivot] = inv[pivot], inv[column]
        scale = 1.0 / rows[column][column]
        rows[column] = [v * scale for v in rows[column]]
        inv[column] = [v * scale for v in inv[column]]
        for r in range(n):
            factor = rows[r][column]
            if r == column or _is_zero(factor):
                continue
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[column])]
            inv[r] = [a - factor * b for a, b in zip(inv[r], inv[column])]
    return inv


def determinant(matrix: Sequence[Sequence[Scalar]]) -> Scalar:
    """Determinant by Gaussian elimination with partial pivoting."""
    n = len(matrix)
    rows: Matrix = [list(row) for row in matrix]
    det: Scalar = 1.0
    for column in range(n):
        pivot = _pivot_row(rows, column)
        if pivot != column:
            rows[column], rows[pivot] = rows[pivot], rows[column]
            det = -det
        head = rows[column][column]
        det = det * head
        for r in range(column + 1, n):
            factor = rows[r][column]
            if _is_zero(factor):
                continue
            ratio = factor / head
            rows[r] = [a - ratio * b for a, b in zip(rows[r], rows[column])]
    return det
