"""Homogeneous polynomials in y with real coefficients."""

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Any

import numpy as np

MultiIndex = tuple[int, ...]


def _compositions(n: int, d: int) -> Iterator[MultiIndex]:
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(n - 1, d - first):
            yield (first, *rest)


@lru_cache(maxsize=None)
def monomials(n: int, d: int) -> tuple[MultiIndex, ...]:
    """Exponents of total degree d in n variables, lexicographically descending."""
    return tuple(_compositions(n, d))


def monomial_matrix(points: np.ndarray, n: int, d: int) -> np.ndarray:
    """V[p, k] = points[p] ** monomials(n, d)[k]."""
    exponents = np.array(monomials(n, d))
    return np.prod(points[:, None, :] ** exponents[None, :, :], axis=2)


@dataclass(frozen=True)
class HomPoly:
    """Sum of c_alpha y^alpha over multi-indices of total degree ``degree``."""

    n: int
    degree: int
    coefficients: Mapping[MultiIndex, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for alpha in self.coefficients:
            if len(alpha) != self.n or sum(alpha) != self.degree or min(alpha) < 0:
                raise ValueError(
                    f"multi-index {alpha} does not have {self.n} entries of total degree {self.degree}"
                )
        cleaned = {tuple(k): float(v) for k, v in self.coefficients.items() if v != 0.0}
        object.__setattr__(self, "coefficients", MappingProxyType(cleaned))

    @classmethod
    def from_vector(cls: type["HomPoly"], n: int, degree: int, values: Sequence[float]) -> "HomPoly":
        """Coefficients listed in ``monomials(n, degree)`` order."""
        return cls(n, degree, dict(zip(monomials(n, degree), map(float, values))))

    @classmethod
    def from_quadratic(cls: type["HomPoly"], matrix: np.ndarray) -> "HomPoly":
        """m_ij y^i y^j for a symmetric matrix."""
        n = len(matrix)
        coefficients: dict[MultiIndex, float] = {}
        for i in range(n):
            for j in range(i, n):
                alpha = [0] * n
                alpha[i] += 1
                alpha[j] += 1
                weight = 1.0 if i == j else 2.0
                coefficients[tuple(alpha)] = weight * float(matrix[i][j])
        return cls(n, 2, coefficients)

    def coefficient(self, alpha: MultiIndex) -> float:
        return self.coefficients.get(tuple(alpha), 0.0)

    def as_vector(self) -> np.ndarray:
        return np.array([self.coefficient(a) for a in monomials(self.n, self.degree)])

    def max_abs(self) -> float:
        return max((abs(v) for v in self.coefficients.values()), default=0.0)

    def __call__(self, y: Sequence[float]) -> float:
        y_arr = np.asarray(y, dtype=float)
        return float(
            sum(c * np.prod(y_arr ** np.array(alpha)) for alpha, c in self.coefficients.items())
        )

    def _check_compatible(self, other: "HomPoly") -> None:
        if other.n != self.n:
            raise ValueError(f"variable counts differ: {self.n} != {other.n}")

    def __add__(self, other: "HomPoly") -> "HomPoly":
        self._check_compatible(other)
        if other.degree != self.degree:
            raise ValueError(f"degrees differ: {self.degree} != {other.degree}")
        total = dict(self.coefficients)
        for alpha, c in other.coefficients.items():
            total[alpha] = total.get(alpha, 0.0) + c
        return HomPoly(self.n, self.degree, total)

    def __neg__(self) -> "HomPoly":
        return HomPoly(self.n, self.degree, {k: -v for k, v in self.coefficients.items()})

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        return self + (-other)

    def __mul__(self, other: "HomPoly | float") -> "HomPoly":
        if not isinstance(other, HomPoly):
            return HomPoly(self.n, self.degree, {k: v * other for k, v in self.coefficients.items()})
        self._check_compatible(other)
        product: dict[MultiIndex, float] = {}
        for a, ca in self.coefficients.items():
            for b, cb in other.coefficients.items():
                key = tuple(i + j for i, j in zip(a, b))
                product[key] = product.get(key, 0.0) + ca * cb
        return HomPoly(self.n, self.degree + other.degree, product)

    __rmul__ = __mul__

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "degree": self.degree,
            "coefficients": [
                {"exponents": list(alpha), "value": self.coefficient(alpha)}
                for alpha in monomials(self.n, self.degree)
                if alpha in self.coefficients
            ],
        }
