"""Builtin Randers metric families.

Vector helpers such as |x|^2 and <a, x> are expanded into coordinate text here
and then compiled by the ordinary parser.
"""

import logging
from collections.abc import Mapping
from itertools import combinations_with_replacement
from typing import Any, Optional, Union

import numpy as np
from pydantic import BaseModel, Field, ValidationError, model_validator

from exprlang.metric import MetricDefinition
from exprlang.nodes import ExprAst
from exprlang.parser import parse_expression
from utils.errors import InputError, InvalidParameterError

logger = logging.getLogger(__name__)

BUILTIN_NAMES = (
    "minkowski_randers",
    "example_1_1",
    "funk",
    "sphere_alpha",
    "conformal_minkowski",
    "random_poly",
)


class BuiltinParams(BaseModel):
    """Parameters of the builtin families."""

    n: int = Field(2, ge=2, le=4, description="Dimension")
    a: Optional[list[float]] = Field(
        None, description="Vector a of example_1_1 (default (1, 0, ...))"
    )
    b: Optional[list[float]] = Field(
        None, description="Constant b-vector of the Minkowski families"
    )
    sigma: Optional[str] = Field(
        None, description="Conformal exponent expression of conformal_minkowski"
    )
    seed: int = Field(0, ge=0, description="Seed of random_poly")

    @model_validator(mode="after")
    def _check_vectors(self) -> "BuiltinParams":
        for name in ("a", "b"):
            vector = getattr(self, name)
            if vector is not None and len(vector) != self.n:
                raise ValueError(f"{name} must have {self.n} components")
        if self.b is not None and float(np.linalg.norm(self.b)) >= 1.0:
            raise ValueError("|b| must be < 1")
        return self


def _sum(terms: list[str]) -> str:
    return "(" + " + ".join(terms) + ")"


def _norm2(n: int) -> str:
    return _sum([f"x{i}^2" for i in range(1, n + 1)])


def _dot(prefix: str, n: int) -> str:
    return _sum([f"{prefix}{i}*x{i}" for i in range(1, n + 1)])


def _vector_params(prefix: str, values: list[float]) -> dict[str, float]:
    return {f"{prefix}{i + 1}": float(v) for i, v in enumerate(values)}


def _compile(
    alpha_text: list[list[str]],
    beta_text: list[str],
    params: dict[str, float],
    note: str,
    source: str,
) -> MetricDefinition:
    n = len(beta_text)
    alpha: list[list[ExprAst]] = [
        [parse_expression(alpha_text[min(i, j)][max(i, j)], n, params) for j in range(n)]
        for i in range(n)
    ]
    beta = [parse_expression(text, n, params) for text in beta_text]
    return MetricDefinition.from_matrices(alpha, beta, params, note, source)


def _example_1_1(p: BuiltinParams) -> tuple[list[list[str]], list[str], dict[str, float], str]:
    n = p.n
    a = p.a if p.a is not None else [1.0] + [0.0] * (n - 1)
    nx = _norm2(n)
    ax = _dot("a", n)
    na = _sum([f"a{i}^2" for i in range(1, n + 1)])
    d = f"(1 - {na}*{nx}^2)"
    v = [f"({nx}*a{i} - 2*{ax}*x{i})" for i in range(1, n + 1)]
    alpha = [
        [
            f"({d} + {v[i]}^2)/{d}^2" if i == j else f"{v[i]}*{v[j]}/{d}^2"
            for j in range(n)
        ]
        for i in range(n)
    ]
    beta = [f"-{v[i]}/{d}" for i in range(n)]
    return alpha, beta, _vector_params("a", a), "|a| |x|^2 < 1"


def _funk(p: BuiltinParams) -> tuple[list[list[str]], list[str], dict[str, float], str]:
    n = p.n
    d = f"(1 - {_norm2(n)})"
    alpha = [
        [
            f"({d} + x{i + 1}^2)/{d}^2" if i == j else f"x{i + 1}*x{j + 1}/{d}^2"
            for j in range(n)
        ]
        for i in range(n)
    ]
    beta = [f"x{i + 1}/{d}" for i in range(n)]
    return alpha, beta, {}, "|x| < 1"


def _sphere_alpha(p: BuiltinParams) -> tuple[list[list[str]], list[str], dict[str, float], str]:
    n = p.n
    factor = f"1/(1 + {_norm2(n)}/4)^2"
    alpha = [[factor if i == j else "0" for j in range(n)] for i in range(n)]
    return alpha, ["0"] * n, {}, "stereographic unit sphere, beta = 0"


def _minkowski_randers(p: BuiltinParams) -> tuple[list[list[str]], list[str], dict[str, float], str]:
    n = p.n
    b = p.b if p.b is not None else [0.0] * n
    alpha = [["1" if i == j else "0" for j in range(n)] for i in range(n)]
    beta = [f"b{i + 1}" for i in range(n)]
    return alpha, beta, _vector_params("b", b), "all x"


def _conformal_minkowski(p: BuiltinParams) -> tuple[list[list[str]], list[str], dict[str, float], str]:
    n = p.n
    b = p.b if p.b is not None else [0.0] * n
    sigma = p.sigma or "0"
    alpha = [
        [f"exp(2*({sigma}))" if i == j else "0" for j in range(n)] for i in range(n)
    ]
    beta = [f"b{i + 1}*exp({sigma})" for i in range(n)]
    return alpha, beta, _vector_params("b", b), f"conformal factor exp({sigma})"


def _polynomial(rng: np.random.Generator, n: int, constant: float, scale: float) -> str:
    terms = [repr(round(constant, 4))] if constant >= 0 else [f"({round(constant, 4)!r})"]
    for degree in (1, 2):
        for combo in combinations_with_replacement(range(1, n + 1), degree):
            coefficient = round(float(rng.uniform(-scale, scale)), 4)
            monomial = "*".join(f"x{i}" for i in combo)
            terms.append(f"({coefficient!r})*{monomial}")
    return " + ".join(terms)


def _random_poly(p: BuiltinParams) -> tuple[list[list[str]], list[str], dict[str, float], str]:
    n = p.n
    rng = np.random.default_rng(p.seed)
    alpha = [["0"] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            constant = 1.0 if i == j else float(rng.uniform(-0.05, 0.05))
            alpha[i][j] = _polynomial(rng, n, constant, 0.05)
            alpha[j][i] = alpha[i][j]
    beta = [_polynomial(rng, n, float(rng.uniform(-0.2, 0.2)), 0.1) for _ in range(n)]
    return alpha, beta, {}, "|x_i| <= 0.3"


_GENERATORS = {
    "minkowski_randers": _minkowski_randers,
    "example_1_1": _example_1_1,
    "funk": _funk,
    "sphere_alpha": _sphere_alpha,
    "conformal_minkowski": _conformal_minkowski,
    "random_poly": _random_poly,
}


def builtin_metric(
    name: str, params: Union[BuiltinParams, Mapping[str, Any], None] = None
) -> MetricDefinition:
    """Build one of the builtin metric families.

    Args:
        name: One of ``BUILTIN_NAMES``
        params: ``BuiltinParams`` or a mapping validated into it

    Returns:
        The compiled metric definition

    Raises:
        InvalidParameterError: unknown name or invalid parameters
    """
    if name not in _GENERATORS:
        raise InvalidParameterError(
            f"unknown builtin {name!r}; choose from {', '.join(BUILTIN_NAMES)}"
        )
    try:
        validated = (
            params
            if isinstance(params, BuiltinParams)
            else BuiltinParams(**dict(params or {}))
        )
    except ValidationError as e:
        raise InvalidParameterError(f"invalid parameters for {name}: {e}") from e
    alpha, beta, bindings, note = _GENERATORS[name](validated)
    source = f"builtin:{name}({validated.model_dump_json(exclude_none=True)})"
    try:
        metric = _compile(alpha, beta, bindings, note, source)
    except InputError as e:
        raise InvalidParameterError(f"{name}: {e}") from e
    logger.debug(f"built {source}")
    return metric
