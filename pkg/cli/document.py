"""JSON report document shared by every subcommand."""

from typing import Any, Optional

from pydantic import BaseModel, Field

VERSION = "0.1.0"


class CheckRow(BaseModel):
    """One closed-versus-reference comparison."""

    name: str
    x: list[float]
    y: Optional[list[float]] = None
    expected: Optional[float] = None
    actual: Optional[float] = None
    error: float
    tolerance: float
    passed: bool
    explained: bool = False


class ReportDocument(BaseModel):
    tool: str = "randers-lab"
    version: str = VERSION
    command: str
    metric_source: str
    parameters: dict[str, Any] = Field(default_factory=dict)
    points: list[dict[str, list[float]]] = Field(default_factory=list)
    reports: list[dict[str, Any]] = Field(default_factory=list)
    checks: list[CheckRow] = Field(default_factory=list)
    classifications: list[dict[str, Any]] = Field(default_factory=list)
    divisibility: list[dict[str, Any]] = Field(default_factory=list)
    term_diff: list[dict[str, Any]] = Field(default_factory=list)
    summary: dict[str, Any] = Field(default_factory=dict)
    passed: bool = True
    timings: dict[str, float] = Field(default_factory=dict)

    def failed_checks(self) -> list[CheckRow]:
        return [c for c in self.checks if not c.passed and not c.explained]
