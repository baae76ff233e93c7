from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from exprlang.metric import MetricDefinition
from exprlang.nodes import ExprAst


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ClassificationResult:
    """Outcome of one pointwise class test.

    Fitted parameters are reported whatever the verdict.
    """

    test: str
    x: tuple[float, ...]
    verdict: Verdict
    residual: float
    tolerance: float
    samples: int
    parameters: dict[str, Any] = field(default_factory=dict)
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    def to_dict(self) -> dict[str, Any]:
        return {
            "test": self.test,
            "x": list(self.x),
            "verdict": self.verdict.value,
            "holds": self.holds,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "samples": self.samples,
            "parameters": self.parameters,
            "note": self.note,
        }


@dataclass(frozen=True)
class ImplicationReport:
    """Antecedent => consequent checked at one point."""

    x: tuple[float, ...]
    antecedent: ClassificationResult
    consequent: ClassificationResult
    implication_holds: bool
    note: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "x": list(self.x),
            "antecedent": self.antecedent.to_dict(),
            "consequent": self.consequent.to_dict(),
            "implication_holds": self.implication_holds,
            "note": self.note,
        }


@dataclass(frozen=True)
class ConformalSpec:
    """base metric, exponent sigma(x) and the scaled metric exp(sigma) (alpha + beta)."""

    base: MetricDefinition
    sigma: ExprAst
    scaled: MetricDefinition
