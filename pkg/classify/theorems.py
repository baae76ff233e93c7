"""Falsification harnesses: weakly isotropic r forces isotropic S, and conformal flatness forces sigma constant."""

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Optional, TypeVar

import numpy as np

from classify.conformal import sigma_gradient
from classify.isotropy import fit_weakly_isotropic_r, test_isotropic_S
from classify.models import ClassificationResult, ConformalSpec, ImplicationReport, Verdict
from config.settings import get_settings
from exprlang.metric import MetricDefinition

logger = logging.getLogger(__name__)

T = TypeVar("T")


def sweep(
    points: Sequence[Sequence[float]],
    check: Callable[[Sequence[float]], T],
    threads: Optional[int] = None,
) -> list[T]:
    """Run ``check`` at every point, in order, on up to ``threads`` workers."""
    workers = get_settings().threads if threads is None else threads
    if workers <= 1 or len(points) <= 1:
        return [check(p) for p in points]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(check, points))


def theorem_1_1_pipeline(
    metric: MetricDefinition,
    x: Sequence[float],
    tolerance: Optional[float] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> ImplicationReport:
    """Weakly isotropic scalar curvature at x implies isotropic S-curvature at x."""
    antecedent = fit_weakly_isotropic_r(metric, x, tolerance, samples, seed)
    consequent = test_isotropic_S(metric, x, tolerance)
    if not antecedent.holds:
        note = "antecedent false"
        implication = True
    elif consequent.holds:
        note = "antecedent and consequent hold"
        implication = True
    else:
        note = "counterexample: weakly isotropic r without isotropic S"
        implication = False
        logger.warning(f"implication violated at x={list(x)} for {metric.source}")
    return ImplicationReport(tuple(map(float, x)), antecedent, consequent, implication, note)


@dataclass(frozen=True)
class ConformalFlatnessReport:
    """Grid evidence for: conformally flat and weakly isotropic r => sigma constant."""

    points: list[tuple[float, ...]]
    sigma_constant: bool
    max_sigma_gradient: float
    fits: list[ClassificationResult]
    weakly_isotropic_anywhere: bool
    falsified: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "points": [list(p) for p in self.points],
            "sigma_constant": self.sigma_constant,
            "max_sigma_gradient": self.max_sigma_gradient,
            "fits": [f.to_dict() for f in self.fits],
            "weakly_isotropic_anywhere": self.weakly_isotropic_anywhere,
            "falsified": self.falsified,
        }


def check_theorem_1_2(
    spec: ConformalSpec,
    points: Sequence[Sequence[float]],
    tolerance: Optional[float] = None,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
) -> ConformalFlatnessReport:
    """A non-Riemannian exp(sigma)-scaled Minkowski metric with weakly isotropic r needs constant sigma.

    The report is a falsifier only: ``falsified`` is set when some grid point
    has weakly isotropic r while sigma has a nonzero gradient there.
    """
    tolerance = get_settings().holds_tolerance if tolerance is None else tolerance
    gradients = [float(np.max(np.abs(sigma_gradient(spec, p)))) for p in points]
    fits = sweep(
        points,
        lambda p: fit_weakly_isotropic_r(spec.scaled, p, tolerance, samples, seed),
    )
    falsified = any(
        fit.verdict is Verdict.HOLDS and gradient > tolerance
        for fit, gradient in zip(fits, gradients)
    )
    if falsified:
        logger.warning(f"conformal flatness falsifier triggered for {spec.scaled.source}")
    return ConformalFlatnessReport(
        [tuple(map(float, p)) for p in points],
        max(gradients, default=0.0) <= tolerance,
        max(gradients, default=0.0),
        fits,
        any(f.holds for f in fits),
        falsified,
    )
