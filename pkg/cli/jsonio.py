"""Deterministic JSON with 17 significant digits per float."""

import json
import math
from collections.abc import Mapping
from pathlib import Path
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel


def _float(value: float) -> str:
    if not math.isfinite(value):
        return "null"
    text = format(value, ".17g")
    if "e" not in text and "." not in text:
        text += ".0"
    return text


def encode(value: Any, indent: int = 2, level: int = 0) -> str:
    """Serialize ``value``; mapping order is kept and non-finite floats become null."""
    if isinstance(value, BaseModel):
        value = value.model_dump()
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return _float(float(value))
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, np.ndarray):
        value = value.tolist()
    if isinstance(value, Mapping):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {encode(v, indent, level + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + f"\n{end}}}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [f"{pad}{encode(v, indent, level + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + f"\n{end}]"
    raise TypeError(f"cannot encode {type(value).__name__}")


def write_document(document: BaseModel, destination: Optional[str]) -> str:
    """Encode ``document`` and write it to a path, or return it for ``-``."""
    text = encode(document) + "\n"
    if destination and destination != "-":
        Path(destination).write_text(text)
    return text
