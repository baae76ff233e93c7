"""Exception hierarchy shared by every package of the laboratory.

Input errors map to CLI exit code 2, everything else derived from
``RandersLabError`` maps to exit code 1.
"""

from typing import Optional


class RandersLabError(Exception):
    """Base exception for the laboratory."""


class InputError(RandersLabError):
    """The caller supplied an invalid metric, expression, point or parameter."""


class ExpressionSyntaxError(InputError):
    """Expression text does not conform to the grammar."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class UnknownIdentifierError(InputError):
    """An identifier is neither a coordinate, a function nor a bound parameter."""


class CoordinateRangeError(InputError):
    """A coordinate index lies outside [1, n]."""


class EvaluationDomainError(InputError):
    """sqrt, log or division evaluated outside their smooth domain."""


class MetricFileError(InputError):
    """A metric file is malformed."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line = line


class InvalidParameterError(InputError):
    """Builtin metric parameters or CLI values are invalid."""


class InvalidMetricError(InputError):
    """a(x) is not positive definite."""

    def __init__(self, message: str, eigenvalue: float) -> None:
        super().__init__(message)
        self.eigenvalue = eigenvalue


class RandersConditionError(InputError):
    """The Randers condition b² < 1 fails (or is too close to failing)."""

    def __init__(self, message: str, b2: float) -> None:
        super().__init__(message)
        self.b2 = b2


class DegenerateDirectionError(InputError):
    """The direction y is zero or numerically degenerate."""


class JetOrderError(InputError):
    """A jet order above the engine limit was requested."""


class ConsistencyError(RandersLabError):
    """An internal identity failed beyond its tolerance."""


class ExtractionError(RandersLabError):
    """Polynomial coefficient extraction failed."""

    def __init__(self, message: str, condition: Optional[float] = None) -> None:
        super().__init__(message)
        self.condition = condition
