"""Expression tree of the metric-definition language.

Nodes are immutable and evaluate over any scalar type that supports the
arithmetic of ``jets`` (plain floats or ``Jet`` values).
"""

from abc import ABC, abstractmethod
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from jets import FUNCTIONS, Scalar, divide, ipow

BINARY_OPERATORS = ("+", "-", "*", "/")


class ExprAst(ABC):
    """Base class of all expression nodes."""

    @abstractmethod
    def evaluate(self, x: Sequence[Scalar], params: Mapping[str, float]) -> Scalar:
        """Value of the expression at ``x`` with ``params`` bound."""

    @abstractmethod
    def pretty(self) -> str:
        """Fully parenthesized text that parses back to an equivalent tree."""

    @property
    def children(self) -> tuple["ExprAst", ...]:
        return ()


@dataclass(frozen=True)
class Constant(ExprAst):
    value: float

    def evaluate(self, x: Sequence[Scalar], params: Mapping[str, float]) -> Scalar:
        return self.value

    def pretty(self) -> str:
        text = repr(float(self.value))
        return f"({text})" if self.value < 0 else text


@dataclass(frozen=True)
class Coordinate(ExprAst):
    """Coordinate x_i with a 1-based index."""

    index: int

    def evaluate(self, x: Sequence[Scalar], params: Mapping[str, float]) -> Scalar:
        return x[self.index - 1]

    def pretty(self) -> str:
        return f"x{self.index}"


@dataclass(frozen=True)
class Parameter(ExprAst):
    name: str

    def evaluate(self, x: Sequence[Scalar], params: Mapping[str, float]) -> Scalar:
        return params[self.name]

    def pretty(self) -> str:
        return self.name


@dataclass(frozen=True)
class Negate(ExprAst):
    operand: ExprAst

    def evaluate(self, x: Sequence[Scalar], params: Mapping[str, float]) -> Scalar:
        return -self.operand.evaluate(x, params)

    def pretty(self) -> str:
        return f"(-{self.operand.pretty()})"

    @property
    def children(self) -> tuple[ExprAst, ...]:
        return (self.operand,)


@dataclass(frozen=True)
class BinaryOp(ExprAst):
    op: str
    left: ExprAst
    right: ExprAst

    def __post_init__(self) -> None:
        if self.op not in BINARY_OPERATORS:
            raise ValueError(f"unknown binary operator {self.op!r}")

    def evaluate(self, x: Sequence[Scalar], params: Mapping[str, float]) -> Scalar:
        left = self.left.evaluate(x, params)
        right = self.right.evaluate(x, params)
        if self.op == "+":
            return left + right
        if self.op == "-":
            return left - right
        if self.op == "*":
            return left * right
        return divide(left, right)

    def pretty(self) -> str:
        return f"({self.left.pretty()} {self.op} {self.right.pretty()})"

    @property
    def children(self) -> tuple[ExprAst, ...]:
        return (self.left, self.right)


@dataclass(frozen=True)
class Power(ExprAst):
    """Integer power with a constant exponent >= 0."""

    base: ExprAst
    exponent: int

    def evaluate(self, x: Sequence[Scalar], params: Mapping[str, float]) -> Scalar:
        return ipow(self.base.evaluate(x, params), self.exponent)

    def pretty(self) -> str:
        return f"({self.base.pretty()})^{self.exponent}"

    @property
    def children(self) -> tuple[ExprAst, ...]:
        return (self.base,)


@dataclass(frozen=True)
class Call(ExprAst):
    function: str
    argument: ExprAst

    def __post_init__(self) -> None:
        if self.function not in FUNCTIONS:
            raise ValueError(f"unknown function {self.function!r}")

    def evaluate(self, x: Sequence[Scalar], params: Mapping[str, float]) -> Scalar:
        return FUNCTIONS[self.function](self.argument.evaluate(x, params))

    def pretty(self) -> str:
        return f"{self.function}({self.argument.pretty()})"

    @property
    def children(self) -> tuple[ExprAst, ...]:
        return (self.argument,)


def evaluate(
    ast: ExprAst, x: Sequence[Scalar], params: Mapping[str, float]
) -> Scalar:
    return ast.evaluate(x, params)
