from exprlang.builtins import BUILTIN_NAMES, BuiltinParams, builtin_metric
from exprlang.metric import (
    RANDERS_MARGIN,
    MetricDefinition,
    load_metric_file,
    parse_metric_text,
)
from exprlang.nodes import (
    BinaryOp,
    Call,
    Constant,
    Coordinate,
    ExprAst,
    Negate,
    Parameter,
    Power,
    evaluate,
)
from exprlang.parser import parse_expression, tokenize

__all__ = [
    "BUILTIN_NAMES",
    "RANDERS_MARGIN",
    "BinaryOp",
    "BuiltinParams",
    "Call",
    "Constant",
    "Coordinate",
    "ExprAst",
    "MetricDefinition",
    "Negate",
    "Parameter",
    "Power",
    "builtin_metric",
    "evaluate",
    "load_metric_file",
    "parse_expression",
    "parse_metric_text",
    "tokenize",
]
