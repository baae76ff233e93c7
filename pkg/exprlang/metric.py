"""Randers metric definitions and the line-oriented metric file format."""

import logging
import re
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Optional

import numpy as np

from exprlang.nodes import Constant, ExprAst
from exprlang.parser import parse_expression
from jets import Scalar
from utils.errors import (
    InputError,
    InvalidMetricError,
    MetricFileError,
    RandersConditionError,
)

logger = logging.getLogger(__name__)

# points with 1 - b^2 below this are rejected
RANDERS_MARGIN = 1e-10


@dataclass(frozen=True)
class MetricDefinition:
    """F = alpha + beta given by expression-valued a_ij(x) and b_i(x).

    Attributes:
        n: Dimension (>= 2)
        alpha_upper: Row i holds the expressions a_ii, ..., a_in (upper triangle)
        beta: Expressions b_1, ..., b_n
        params: Parameter bindings used by the expressions
        domain_note: Free-text note on the admissible domain
        source: Where the definition came from (file path or builtin call)
    """

    n: int
    alpha_upper: tuple[tuple[ExprAst, ...], ...]
    beta: tuple[ExprAst, ...]
    params: Mapping[str, float] = field(default_factory=dict)
    domain_note: str = ""
    source: str = "inline"

    def __post_init__(self) -> None:
        if self.n < 2:
            raise MetricFileError(f"dimension must be at least 2, got {self.n}")
        if len(self.alpha_upper) != self.n or any(
            len(row) != self.n - i for i, row in enumerate(self.alpha_upper)
        ):
            raise MetricFileError("alpha must be an upper-triangular n x n table")
        if len(self.beta) != self.n:
            raise MetricFileError(f"beta must have {self.n} entries")
        object.__setattr__(self, "params", MappingProxyType(dict(self.params)))

    @classmethod
    def from_matrices(
        cls: type["MetricDefinition"],
        alpha: Sequence[Sequence[ExprAst]],
        beta: Sequence[ExprAst],
        params: Optional[Mapping[str, float]] = None,
        domain_note: str = "",
        source: str = "inline",
    ) -> "MetricDefinition":
        """Build from a full matrix; only the upper triangle is kept."""
        n = len(beta)
        upper = tuple(tuple(alpha[i][j] for j in range(i, n)) for i in range(n))
        return cls(n, upper, tuple(beta), params or {}, domain_note, source)

    def alpha_entry(self, i: int, j: int) -> ExprAst:
        """Expression of a_ij (0-based, symmetric)."""
        if i > j:
            i, j = j, i
        return self.alpha_upper[i][j - i]

    def alpha_matrix(self, x: Sequence[Scalar]) -> list[list[Scalar]]:
        n = self.n
        a: list[list[Scalar]] = [[0.0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                value = self.alpha_upper[i][j - i].evaluate(x, self.params)
                a[i][j] = value
                a[j][i] = value
        return a

    def beta_vector(self, x: Sequence[Scalar]) -> list[Scalar]:
        return [b.evaluate(x, self.params) for b in self.beta]

    def validate_at(self, x: Sequence[float]) -> tuple[np.ndarray, np.ndarray, float]:
        """Numeric a(x), b(x) and b^2 after checking positivity and the Randers condition.

        Raises:
            InvalidMetricError: a(x) is not positive definite
            RandersConditionError: 1 - b^2 is below the margin
        """
        a = np.array(self.alpha_matrix([float(v) for v in x]), dtype=float)
        b = np.array(self.beta_vector([float(v) for v in x]), dtype=float)
        smallest = float(np.linalg.eigvalsh(a)[0])
        if smallest <= 0.0:
            raise InvalidMetricError(
                f"a(x) is not positive definite at x={list(x)}: "
                f"eigenvalue {smallest:.3e}",
                smallest,
            )
        b2 = float(b @ np.linalg.solve(a, b))
        if 1.0 - b2 < RANDERS_MARGIN:
            raise RandersConditionError(
                f"Randers condition fails at x={list(x)}: |beta|_alpha^2 = {b2:.6g}",
                b2,
            )
        return a, b, b2

    def finsler_norm(self, x: Sequence[float], y: Sequence[float]) -> float:
        a = np.array(self.alpha_matrix([float(v) for v in x]), dtype=float)
        b = np.array(self.beta_vector([float(v) for v in x]), dtype=float)
        y_arr = np.asarray(y, dtype=float)
        return float(np.sqrt(y_arr @ a @ y_arr) + b @ y_arr)

    def to_text(self) -> str:
        """Serialize to the metric file format."""
        lines = [f"dim = {self.n}"]
        if self.domain_note:
            lines.append(f'note = "{self.domain_note}"')
        if self.params:
            lines.append("[params]")
            lines.extend(f"{name} = {value!r}" for name, value in self.params.items())
        lines.append("[alpha]")
        for i in range(self.n):
            for j in range(i, self.n):
                lines.append(f'a{i + 1}{j + 1} = "{self.alpha_entry(i, j).pretty()}"')
        lines.append("[beta]")
        for i, b in enumerate(self.beta):
            lines.append(f'b{i + 1} = "{b.pretty()}"')
        return "\n".join(lines) + "\n"


_ASSIGNMENT = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)\s*=\s*(.+?)\s*$")
_ALPHA_KEY = re.compile(r"a(\d)(\d)")
_BETA_KEY = re.compile(r"b(\d)")


def _unquote(raw: str, line: int) -> str:
    if len(raw) < 2 or raw[0] != '"' or raw[-1] != '"':
        raise MetricFileError(f"expected a double-quoted expression, got {raw}", line)
    return raw[1:-1]


def parse_metric_text(text: str, source: str = "inline") -> MetricDefinition:
    """Parse the metric file format.

    Raises:
        MetricFileError: structural problems, with the line number
    """
    dim: Optional[int] = None
    note = ""
    params: dict[str, float] = {}
    alpha_raw: dict[tuple[int, int], tuple[str, int]] = {}
    beta_raw: dict[int, tuple[str, int]] = {}
    section = ""
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            if section not in ("params", "alpha", "beta"):
                raise MetricFileError(f"unknown section [{section}]", number)
            continue
        match = _ASSIGNMENT.match(line)
        if match is None:
            raise MetricFileError(f"cannot read {line!r}", number)
        key, value = match.groups()
        if section == "":
            if key == "dim":
                try:
                    dim = int(value)
                except ValueError as e:
                    raise MetricFileError(f"dim must be an integer, got {value}", number) from e
            elif key == "note":
                note = _unquote(value, number)
            else:
                raise MetricFileError(f"unexpected key {key!r} before sections", number)
        elif section == "params":
            try:
                params[key] = float(value)
            except ValueError as e:
                raise MetricFileError(f"parameter {key} is not a number", number) from e
        elif section == "alpha":
            entry = _ALPHA_KEY.fullmatch(key)
            if entry is None:
                raise MetricFileError(f"alpha keys look like a12, got {key!r}", number)
            i, j = int(entry.group(1)), int(entry.group(2))
            if i > j:
                raise MetricFileError(f"{key}: only i <= j entries are stored", number)
            alpha_raw[(i, j)] = (_unquote(value, number), number)
        else:
            entry = _BETA_KEY.fullmatch(key)
            if entry is None:
                raise MetricFileError(f"beta keys look like b1, got {key!r}", number)
            beta_raw[int(entry.group(1))] = (_unquote(value, number), number)

    if dim is None:
        raise MetricFileError("missing 'dim = <n>' header")
    n = dim
    for (i, j), (_, number) in alpha_raw.items():
        if not 1 <= i <= j <= n:
            raise MetricFileError(f"a{i}{j} outside dimension {n}", number)
    for i, (_, number) in beta_raw.items():
        if not 1 <= i <= n:
            raise MetricFileError(f"b{i} outside dimension {n}", number)
    for i in range(1, n + 1):
        if (i, i) not in alpha_raw:
            raise MetricFileError(f"diagonal entry a{i}{i} is missing")

    def compile_entry(entry_text: str, key: str, number: int) -> ExprAst:
        try:
            return parse_expression(entry_text, n, params)
        except InputError as e:
            raise MetricFileError(f"{key}: {e}", number) from e

    upper = []
    for i in range(1, n + 1):
        row = []
        for j in range(i, n + 1):
            if (i, j) in alpha_raw:
                entry_text, number = alpha_raw[(i, j)]
                row.append(compile_entry(entry_text, f"a{i}{j}", number))
            else:
                row.append(Constant(0.0))
        upper.append(tuple(row))
    beta = []
    for i in range(1, n + 1):
        if i in beta_raw:
            entry_text, number = beta_raw[i]
            beta.append(compile_entry(entry_text, f"b{i}", number))
        else:
            beta.append(Constant(0.0))
    logger.info(f"Loaded metric from {source}: dim={n}, params={sorted(params)}")
    return MetricDefinition(n, tuple(upper), tuple(beta), params, note, source)


def load_metric_file(path: Path) -> MetricDefinition:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise MetricFileError(f"cannot read metric file {path}: {e}") from e
    return parse_metric_text(text, source=str(path))
