"""Elementary functions over plain floats and jets alike.

The float branches use the same operation sequence as the jet constant terms,
so evaluating on floats reproduces the order-0 jet coefficient exactly.
"""

import math
from collections.abc import Callable, Iterable, Sequence
from typing import Optional

from jets.jet import Jet, Scalar
from jets.space import MAX_ORDER, JetSpace, MultiIndex
from utils.errors import EvaluationDomainError, JetOrderError


def value_of(v: Scalar) -> float:
    """Order-0 value of a scalar."""
    return v.value if isinstance(v, Jet) else float(v)


def sqrt(v: Scalar) -> Scalar:
    if isinstance(v, Jet):
        return v.sqrt()
    if v < 0.0:
        raise EvaluationDomainError(f"sqrt of negative value {v!r}")
    return math.sqrt(v)


def exp(v: Scalar) -> Scalar:
    return v.exp() if isinstance(v, Jet) else math.exp(v)


def log(v: Scalar) -> Scalar:
    if isinstance(v, Jet):
        return v.log()
    if v <= 0.0:
        raise EvaluationDomainError(f"log of non-positive value {v!r}")
    return math.log(v)


def sin(v: Scalar) -> Scalar:
    return v.sin() if isinstance(v, Jet) else math.sin(v)


def cos(v: Scalar) -> Scalar:
    return v.cos() if isinstance(v, Jet) else math.cos(v)


def divide(numerator: Scalar, denominator: Scalar) -> Scalar:
    if value_of(denominator) == 0.0:
        raise EvaluationDomainError("division by zero")
    return numerator / denominator


def ipow(v: Scalar, exponent: int) -> Scalar:
    """Non-negative integer power by binary exponentiation."""
    if exponent < 0:
        raise EvaluationDomainError(f"negative exponent {exponent}")
    if exponent == 0:
        return Jet.constant(v.space, 1.0) if isinstance(v, Jet) else 1.0
    result: Optional[Scalar] = None
    base = v
    while exponent:
        if exponent & 1:
            result = base if result is None else result * base
        exponent >>= 1
        if exponent:
            base = base * base
    assert result is not None
    return result


FUNCTIONS: dict[str, Callable[[Scalar], Scalar]] = {
    "sqrt": sqrt,
    "exp": exp,
    "log": log,
    "sin": sin,
    "cos": cos,
}


def seed(
    point: Sequence[float],
    active: Iterable[int],
    order: int,
    *,
    lead: int = 0,
    lead_order: int = MAX_ORDER,
) -> list[Scalar]:
    """Jets for every coordinate of ``point``.

    Coordinate ``active[k]`` becomes jet variable ``k``; inactive coordinates are
    constant jets. ``lead``/``lead_order`` cap the joint order of the first
    ``lead`` jet variables.
    """
    if order > MAX_ORDER:
        raise JetOrderError(f"jet order {order} exceeds the engine limit {MAX_ORDER}")
    active = list(active)
    if len(set(active)) != len(active) or any(
        not 0 <= i < len(point) for i in active
    ):
        raise ValueError(f"active variables {active} are not a subset of coordinates")
    space = JetSpace(max(len(active), 1), order, lead, lead_order)
    slot = {coordinate: k for k, coordinate in enumerate(active)}
    return [
        Jet.variable(space, slot[i], float(p))
        if i in slot
        else Jet.constant(space, float(p))
        for i, p in enumerate(point)
    ]


def partial(
    f: Callable[[list[Scalar]], Scalar],
    point: Sequence[float],
    alpha: MultiIndex,
) -> float:
    """Mixed partial derivative d^alpha f at ``point``."""
    if len(alpha) != len(point):
        raise ValueError("multi-index length must match the point dimension")
    order = sum(alpha)
    jets = seed(point, range(len(point)), order)
    result = f(jets)
    if not isinstance(result, Jet):
        return float(result) if order == 0 else 0.0
    return result.partial(tuple(alpha))
