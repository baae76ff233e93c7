from jets.functions import (
    FUNCTIONS,
    cos,
    divide,
    exp,
    ipow,
    log,
    partial,
    seed,
    sin,
    sqrt,
    value_of,
)
from jets.jet import Jet, Scalar
from jets.linalg import determinant, inverse
from jets.space import MAX_ORDER, JetSpace

__all__ = [
    "FUNCTIONS",
    "MAX_ORDER",
    "Jet",
    "JetSpace",
    "Scalar",
    "cos",
    "determinant",
    "divide",
    "exp",
    "inverse",
    "ipow",
    "log",
    "partial",
    "seed",
    "sin",
    "sqrt",
    "value_of",
]
