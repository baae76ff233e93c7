from utils.errors import (
    ConsistencyError,
    CoordinateRangeError,
    DegenerateDirectionError,
    EvaluationDomainError,
    ExpressionSyntaxError,
    ExtractionError,
    InputError,
    InvalidMetricError,
    InvalidParameterError,
    JetOrderError,
    MetricFileError,
    RandersConditionError,
    RandersLabError,
    UnknownIdentifierError,
)

__all__ = [
    "ConsistencyError",
    "CoordinateRangeError",
    "DegenerateDirectionError",
    "EvaluationDomainError",
    "ExpressionSyntaxError",
    "ExtractionError",
    "InputError",
    "InvalidMetricError",
    "InvalidParameterError",
    "JetOrderError",
    "MetricFileError",
    "RandersConditionError",
    "RandersLabError",
    "UnknownIdentifierError",
]
