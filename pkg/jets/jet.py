"""Truncated multivariate Taylor arithmetic.

A ``Jet`` stores the Taylor coefficients c_alpha of a function at an expansion
point, so that f(p + h) = sum_alpha c_alpha h^alpha up to the truncation of its
``JetSpace``. The partial derivative d^alpha f(p) is alpha! * c_alpha.
"""

import math
from collections.abc import Sequence
from typing import Union

import numpy as np

from jets.space import (
    JetSpace,
    MultiIndex,
    derivative_table,
    factorial_weights,
    product_table,
    projection_table,
)
from utils.errors import EvaluationDomainError

Scalar = Union[float, "Jet"]


class Jet:
    """Truncated Taylor expansion of a scalar function."""

    __slots__ = ("coefficients", "space")
    # numpy scalars defer to our reflected operators
    __array_ufunc__ = None

    def __init__(self, space: JetSpace, coefficients: np.ndarray) -> None:
        self.space = space
        self.coefficients = coefficients

    @classmethod
    def constant(cls: type["Jet"], space: JetSpace, value: float) -> "Jet":
        coefficients = np.zeros(space.size)
        coefficients[0] = value
        return cls(space, coefficients)

    @classmethod
    def variable(cls: type["Jet"], space: JetSpace, var: int, value: float) -> "Jet":
        jet = cls.constant(space, value)
        if space.order >= 1:
            unit = [0] * space.nvars
            unit[var] = 1
            jet.coefficients[space.index(tuple(unit))] = 1.0
        return jet

    @property
    def value(self) -> float:
        return float(self.coefficients[0])

    def coefficient(self, alpha: MultiIndex) -> float:
        return float(self.coefficients[self.space.index(tuple(alpha))])

    def partial(self, alpha: MultiIndex) -> float:
        """The mixed partial derivative d^alpha at the expansion point."""
        i = self.space.index(tuple(alpha))
        return float(self.coefficients[i] * factorial_weights(self.space)[i])

    def derivative(self, var: int) -> "Jet":
        target, sources, factors = derivative_table(self.space, var)
        return Jet(target, self.coefficients[sources] * factors)

    def project(self, space: JetSpace) -> "Jet":
        if space == self.space:
            return self
        return Jet(space, self.coefficients[projection_table(self.space, space)])

    def _aligned(self, other: "Jet") -> tuple[JetSpace, np.ndarray, np.ndarray]:
        space = self.space.meet(other.space)
        return (
            space,
            self.project(space).coefficients,
            other.project(space).coefficients,
        )

    # arithmetic

    def __neg__(self) -> "Jet":
        return Jet(self.space, -self.coefficients)

    def __pos__(self) -> "Jet":
        return self

    def __add__(self, other: Scalar) -> "Jet":
        if isinstance(other, Jet):
            space, a, b = self._aligned(other)
            return Jet(space, a + b)
        coefficients = self.coefficients.copy()
        coefficients[0] = coefficients[0] + other
        return Jet(self.space, coefficients)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "Jet":
        if isinstance(other, Jet):
            space, a, b = self._aligned(other)
            return Jet(space, a - b)
        coefficients = self.coefficients.copy()
        coefficients[0] = coefficients[0] - other
        return Jet(self.space, coefficients)

    def __rsub__(self, other: float) -> "Jet":
        coefficients = -self.coefficients
        coefficients[0] = other - self.coefficients[0]
        return Jet(self.space, coefficients)

    def __mul__(self, other: Scalar) -> "Jet":
        if isinstance(other, Jet):
            space, a, b = self._aligned(other)
            left, right, target = product_table(space)
            return Jet(
                space, np.bincount(target, weights=a[left] * b[right], minlength=space.size)
            )
        return Jet(self.space, self.coefficients * other)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "Jet":
        if isinstance(other, Jet):
            quotient = self * other.reciprocal()
            quotient.coefficients[0] = self.coefficients[0] / other.coefficients[0]
            return quotient
        if other == 0:
            raise EvaluationDomainError("division by zero")
        return Jet(self.space, self.coefficients / other)

    def __rtruediv__(self, other: float) -> "Jet":
        quotient = self.reciprocal() * other
        quotient.coefficients[0] = other / self.coefficients[0]
        return quotient

    def __pow__(self, exponent: int) -> "Jet":
        from jets.functions import ipow

        return ipow(self, exponent)

    def __repr__(self) -> str:
        return f"Jet(value={self.value!r}, order={self.space.order}, size={self.space.size})"

    # univariate functions through their Taylor series at the constant term

    def _compose(self, taylor: Sequence[float]) -> "Jet":
        nilpotent = self.coefficients.copy()
        nilpotent[0] = 0.0
        h = Jet(self.space, nilpotent)
        result: Scalar = taylor[-1]
        for t in reversed(taylor[:-1]):
            result = h * result + t
        if not isinstance(result, Jet):
            return Jet.constant(self.space, result)
        result.coefficients[0] = taylor[0]
        return result

    def reciprocal(self) -> "Jet":
        u = self.value
        if u == 0.0:
            raise EvaluationDomainError("division by zero")
        taylor = [1.0 / u]
        for _ in range(self.space.order):
            taylor.append(-taylor[-1] / u)
        return self._compose(taylor)

    def sqrt(self) -> "Jet":
        u = self.value
        if u < 0.0 or (u == 0.0 and self.space.order > 0):
            raise EvaluationDomainError(f"sqrt is not smooth at {u!r}")
        taylor = [math.sqrt(u)]
        for j in range(1, self.space.order + 1):
            taylor.append(taylor[-1] * (0.5 - (j - 1)) / (j * u))
        return self._compose(taylor)

    def exp(self) -> "Jet":
        e = math.exp(self.value)
        return self._compose(
            [e / math.factorial(j) for j in range(self.space.order + 1)]
        )

    def log(self) -> "Jet":
        u = self.value
        if u <= 0.0:
            raise EvaluationDomainError(f"log is not defined at {u!r}")
        taylor = [math.log(u)]
        for j in range(1, self.space.order + 1):
            taylor.append((-1.0) ** (j + 1) / (j * u**j))
        return self._compose(taylor)

    def sin(self) -> "Jet":
        s, c = math.sin(self.value), math.cos(self.value)
        cycle = (s, c, -s, -c)
        return self._compose(
            [cycle[j % 4] / math.factorial(j) for j in range(self.space.order + 1)]
        )

    def cos(self) -> "Jet":
        s, c = math.sin(self.value), math.cos(self.value)
        cycle = (c, -s, -c, s)
        return self._compose(
            [cycle[j % 4] / math.factorial(j) for j in range(self.space.order + 1)]
        )
