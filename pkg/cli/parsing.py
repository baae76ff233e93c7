"""Command-line value syntax: points, grids and builtin parameters."""

from collections.abc import Sequence
from typing import Any

import numpy as np

from utils.errors import InvalidParameterError


def _floats(text: str, what: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise InvalidParameterError(f"{what}: expected comma-separated numbers, got {text!r}") from e


def parse_point(text: str, n: int) -> tuple[list[float], list[float]]:
    """``x=<csv>;y=<csv>`` into (x, y)."""
    parts: dict[str, list[float]] = {}
    for chunk in text.split(";"):
        key, sep, value = chunk.partition("=")
        key = key.strip()
        if not sep or key not in ("x", "y"):
            raise InvalidParameterError(f"point must look like x=<csv>;y=<csv>, got {text!r}")
        parts[key] = _floats(value, key)
    if set(parts) != {"x", "y"}:
        raise InvalidParameterError(f"point needs both x and y: {text!r}")
    for key, values in parts.items():
        if len(values) != n:
            raise InvalidParameterError(f"{key} has {len(values)} components, expected {n}")
    return parts["x"], parts["y"]


def parse_grid(text: str, n: int) -> list[tuple[float, ...]]:
    """``x1=lo:hi:steps,x2=...`` into grid points; unnamed coordinates stay 0."""
    axes: list[list[float]] = [[0.0] for _ in range(n)]
    for chunk in text.split(","):
        key, sep, value = chunk.partition("=")
        key = key.strip()
        if not sep or not key.startswith("x") or not key[1:].isdigit():
            raise InvalidParameterError(f"grid axis must look like x1=lo:hi:steps, got {chunk!r}")
        index = int(key[1:])
        if not 1 <= index <= n:
            raise InvalidParameterError(f"grid axis {key} is outside x1..x{n}")
        try:
            lo, hi, steps = value.split(":")
            count = int(steps)
            axes[index - 1] = np.linspace(float(lo), float(hi), count).tolist()
        except ValueError as e:
            raise InvalidParameterError(f"grid axis {chunk!r} must be lo:hi:steps") from e
        if count < 1:
            raise InvalidParameterError(f"grid axis {key} needs at least one step")
    mesh = np.meshgrid(*axes, indexing="ij")
    return [tuple(float(v) for v in p) for p in np.stack([m.ravel() for m in mesh], axis=1)]


def parse_params(items: Sequence[str]) -> dict[str, Any]:
    """Repeated ``k=v``; comma lists become float lists, integers stay integers."""
    params: dict[str, Any] = {}
    for item in items:
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise InvalidParameterError(f"parameter must look like key=value, got {item!r}")
        value = value.strip()
        if key == "sigma":
            params[key] = value
        elif "," in value:
            params[key] = _floats(value, key)
        else:
            try:
                params[key] = int(value)
            except ValueError:
                try:
                    params[key] = float(value)
                except ValueError:
                    params[key] = value
    return params
