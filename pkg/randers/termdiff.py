"""Localize errors of the printed term tables against the semi-closed route.

Each term of a table is a column of values over the samples. A table family
that disagrees with the reference first gets the recorded ``CORRECTIONS``;
whatever disagreement survives goes to a greedy least-squares search that
picks at most a few terms whose coefficients, rescaled by a common factor,
restore agreement.
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any, Literal, Optional

import numpy as np

from config.settings import get_settings
from exprlang.metric import MetricDefinition
from jets import Scalar, value_of
from randers.scalar import r_alpha_parts, semi_gamma
from randers.terms import (
    CORRECTIONS,
    GAMMA_1_PRINTED,
    GAMMA_2_PRINTED,
    SIGMA_1_PRINTED,
    SIGMA_2_PRINTED,
    Correction,
    Term,
    apply_corrections,
    e_substituted,
)
from riemann.alpha import alpha_at
from riemann.beta import beta_invariants
from riemann.contraction import contract_at

logger = logging.getLogger(__name__)

Family = Literal["sigma", "gamma_printed"]
Verdict = Literal["validated", "corrected", "unexplained"]
TablePair = tuple[tuple[str, tuple[Term, ...]], tuple[str, tuple[Term, ...]]]

_FAMILIES: dict[str, TablePair] = {
    "sigma": (("sigma_1", SIGMA_1_PRINTED), ("sigma_2", SIGMA_2_PRINTED)),
    "gamma_printed": (("gamma_1_printed", GAMMA_1_PRINTED), ("gamma_2_printed", GAMMA_2_PRINTED)),
}


@dataclass(frozen=True)
class TermCorrection:
    """A coefficient change: a recorded ``printed -> corrected`` pair or a fitted ``factor``."""

    table: str
    index: int
    label: str
    factor: Optional[float] = None
    printed: str = ""
    corrected: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "table": self.table,
            "index": self.index,
            "label": self.label,
            "factor": self.factor,
            "printed": self.printed,
            "corrected": self.corrected,
        }


@dataclass(frozen=True)
class TermDiffReport:
    family: str
    samples: int
    residual_before: float
    residual_after: float
    verdict: Verdict
    corrections: list[TermCorrection] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "samples": self.samples,
            "residual_before": self.residual_before,
            "residual_after": self.residual_after,
            "verdict": self.verdict,
            "corrections": [c.to_dict() for c in self.corrections],
        }


@dataclass(frozen=True)
class _Sample:
    reference_1: float
    reference_2: float
    symbols: Mapping[str, Scalar]
    n: int
    b2: float


def _references(
    metric: MetricDefinition,
    samples: Sequence[tuple[Sequence[float], Sequence[float]]],
    family: str,
) -> list[_Sample]:
    """Semi-closed Gamma1 and Gamma2 per sample, minus the r_alpha parts for Sigma."""
    out = []
    for x, y in samples:
        alpha = alpha_at(metric, x)
        beta = beta_invariants(metric, x, alpha)
        ctx = contract_at(alpha, beta, [float(v) for v in y])
        symbols = ctx.symbols()
        if family == "gamma_printed":
            symbols = e_substituted(symbols)
        reference_1, reference_2 = semi_gamma(alpha, beta, ctx)
        if family == "sigma":
            odd, even = r_alpha_parts(value_of(ctx.alpha2), value_of(ctx.beta), alpha.r_alpha)
            reference_1, reference_2 = reference_1 - odd, reference_2 - even
        out.append(_Sample(reference_1, reference_2, symbols, ctx.n, ctx.b2))
    return out


def _rows(
    references: Sequence[_Sample], table_1: Sequence[Term], table_2: Sequence[Term]
) -> tuple[np.ndarray, np.ndarray]:
    """Targets and per-term columns, two rows per sample.

    The first row of a sample compares table 1 with the odd part of the
    semi-closed 4F^5 r, the second compares table 2 with the even part
    divided by alpha. Each row is divided by the magnitudes entering it, at
    least 1.
    """
    split = len(table_1)
    terms = list(table_1) + list(table_2)
    targets, rows = [], []
    for sample in references:
        values = np.array(
            [value_of(term.evaluate(sample.symbols, sample.n, sample.b2)) for term in terms]
        )
        for reference, lo, hi in (
            (sample.reference_1, 0, split),
            (sample.reference_2, split, len(values)),
        ):
            row = np.zeros(len(values))
            row[lo:hi] = values[lo:hi]
            scale = max(abs(reference) + float(np.sum(np.abs(row))), 1.0)
            targets.append((reference - float(np.sum(row))) / scale)
            rows.append(row / scale)
    return np.array(targets), np.array(rows)


def _fit(columns: np.ndarray, target: np.ndarray) -> tuple[np.ndarray, float]:
    delta, *_ = np.linalg.lstsq(columns, target, rcond=None)
    return delta, float(np.max(np.abs(target - columns @ delta)))


def _max_abs(target: np.ndarray) -> float:
    return float(np.max(np.abs(target))) if len(target) else 0.0


def _recorded(
    pair: TablePair, corrections: Sequence[Correction]
) -> tuple[TablePair, list[TermCorrection]]:
    """The family with the recorded corrections applied, and what was changed."""
    applied: list[TermCorrection] = []
    patched = []
    for name, table in pair:
        patched.append((name, apply_corrections(name, table, corrections)))
        for correction in corrections:
            if correction.table != name:
                continue
            index = next(i for i, t in enumerate(table) if t.label == correction.label)
            applied.append(
                TermCorrection(
                    name,
                    index,
                    correction.label,
                    printed=correction.printed,
                    corrected=correction.corrected,
                )
            )
    return (patched[0], patched[1]), applied


def term_diff(
    metric: MetricDefinition,
    samples: Sequence[tuple[Sequence[float], Sequence[float]]],
    family: Family = "sigma",
    tolerance: Optional[float] = None,
    max_terms: int = 3,
    corrections: Sequence[Correction] = CORRECTIONS,
) -> TermDiffReport:
    """Compare a printed table family with the semi-closed scalar curvature.

    Residuals are max-abs over the rows of ``_rows``. ``residual_after`` is
    measured after the recorded corrections and any fitted factors.
    """
    tolerance = get_settings().holds_tolerance if tolerance is None else tolerance
    references = _references(metric, samples, family)
    printed = _FAMILIES[family]
    target, columns = _rows(references, printed[0][1], printed[1][1])
    before = _max_abs(target)
    if before < tolerance:
        return TermDiffReport(family, len(samples), before, before, "validated")

    pair, applied = _recorded(printed, corrections)
    if applied:
        target, columns = _rows(references, pair[0][1], pair[1][1])
    after = _max_abs(target)
    logger.debug(f"term-diff {family}: {len(applied)} recorded corrections, residual {after:.3e}")

    meta = [(pair[0][0], i, t) for i, t in enumerate(pair[0][1])]
    meta += [(pair[1][0], i, t) for i, t in enumerate(pair[1][1])]
    usable = [k for k in range(columns.shape[1]) if np.any(columns[:, k] != 0.0)]
    chosen: list[int] = []
    delta = np.zeros(0)
    while len(chosen) < max_terms and after >= tolerance:
        best: Optional[tuple[float, int, np.ndarray]] = None
        for k in usable:
            if k in chosen:
                continue
            trial_delta, residual = _fit(columns[:, chosen + [k]], target)
            if best is None or residual < best[0]:
                best = (residual, k, trial_delta)
        if best is None:
            break
        after, k, delta = best
        chosen.append(k)
        logger.debug(f"term-diff {family}: picked {meta[k][0]}[{meta[k][1]}] residual {after:.3e}")

    fitted = [
        TermCorrection(meta[k][0], meta[k][1], meta[k][2].label, 1.0 + float(d))
        for k, d in zip(chosen, delta)
    ]
    verdict: Verdict = "corrected" if after < tolerance else "unexplained"
    if verdict == "unexplained":
        logger.warning(f"term-diff {family}: residual {after:.3e} not explained by {max_terms} terms")
    return TermDiffReport(family, len(samples), before, after, verdict, applied + fitted)


def coefficient_record(
    n: int, samples: int, printed_residual: float, residual: float, tolerance: float
) -> TermDiffReport:
    """Record the beta e_00^2 coefficient of the divisibility identity.

    ``printed_residual`` is the worst relative residual with the printed
    18(1 - b^2), ``residual`` the one with 18(n - 1)(1 - b^2).
    """
    if printed_residual < tolerance:
        return TermDiffReport("divisibility", samples, printed_residual, printed_residual, "validated")
    verdict: Verdict = "corrected" if residual < tolerance else "unexplained"
    if verdict == "unexplained":
        logger.warning(f"divisibility residual {residual:.3e} survives the (n - 1) correction")
    return TermDiffReport(
        "divisibility",
        samples,
        printed_residual,
        residual,
        verdict,
        [
            TermCorrection(
                "divisibility_identity",
                0,
                "beta*e_00^2",
                float(n - 1),
                printed="18(1-b^2)",
                corrected="18(n-1)(1-b^2)",
            )
        ],
    )
