"""Subcommand bodies; each returns the document and its exit code."""

import logging
import time
from collections.abc import Sequence
from typing import Any, Optional

from classify.conformal import check_conformal_S, conformal_scale
from classify.isotropy import check_lemma_2_1, fit_weak_einstein, test_isotropic_S
from classify.sampling import sample_points, unit_directions
from classify.theorems import sweep, theorem_1_1_pipeline
from cli.document import CheckRow, ReportDocument
from config.settings import get_settings
from exprlang.metric import MetricDefinition
from jets import value_of
from oracle.curvature import definitional_curvature
from polyalg.checks import check_eq_4_6
from randers.report import curvature_report
from randers.ricci import ricci_closed
from randers.scalar import (
    gamma_decomposition,
    scalar_curvature_closed,
    scalar_curvature_pieces,
    scalar_curvature_semi,
    semi_gamma,
)
from randers.termdiff import coefficient_record, term_diff
from randers.volume import sigma_bh, sigma_bh_quadrature
from riemann.alpha import alpha_at
from riemann.beta import beta_invariants
from riemann.contraction import contract_at

logger = logging.getLogger(__name__)

# sigma of the conformal relation check
CONFORMAL_SIGMA = "0.1*sin(x1)"
# Monte Carlo volumes converge slowly; the trapezoid rule (n = 2) does not
MONTE_CARLO_TOLERANCE = 5e-3
GAMMA_IDENTITY_TOLERANCE = 1e-9
DIVISIBILITY_POINTS = 3


def relative_error(actual: float, expected: float) -> float:
    return abs(actual - expected) / (1.0 + abs(expected))


def _row(
    name: str,
    x: Sequence[float],
    y: Optional[Sequence[float]],
    expected: float,
    actual: float,
    tolerance: float,
) -> CheckRow:
    error = relative_error(actual, expected)
    return CheckRow(
        name=name,
        x=[float(v) for v in x],
        y=None if y is None else [float(v) for v in y],
        expected=expected,
        actual=actual,
        error=error,
        tolerance=tolerance,
        passed=error <= tolerance,
    )


def cmd_report(
    metric: MetricDefinition, x: Sequence[float], y: Sequence[float], parameters: dict[str, Any]
) -> tuple[ReportDocument, int]:
    started = time.perf_counter()
    report = curvature_report(metric, x, y)
    document = ReportDocument(
        command="report",
        metric_source=metric.source,
        parameters=parameters,
        points=[{"x": list(report.x), "y": list(report.y)}],
        reports=[report.to_dict()],
        summary={
            "r_closed": report.r_closed,
            "r_semi": report.r_semi,
            "r_definitional": report.r_definitional,
            "s_over_f": report.s_curvature / report.F,
        },
    )
    document.timings["total"] = time.perf_counter() - started
    return document, 0


def _scaled_row(
    name: str,
    x: Sequence[float],
    y: Sequence[float],
    expected: float,
    actual: float,
    tolerance: float,
) -> CheckRow:
    """Like ``_row`` but relative to the larger magnitude, for quantities of degree 4 or 5 in y."""
    error = abs(actual - expected) / max(abs(expected), abs(actual), 1.0)
    return CheckRow(
        name=name,
        x=[float(v) for v in x],
        y=[float(v) for v in y],
        expected=expected,
        actual=actual,
        error=error,
        tolerance=tolerance,
        passed=error <= tolerance,
    )


def _point_checks(
    metric: MetricDefinition, x: Sequence[float], y: Sequence[float], tolerance: float
) -> list[CheckRow]:
    alpha = alpha_at(metric, x)
    beta = beta_invariants(metric, x, alpha)
    ctx = contract_at(alpha, beta, list(y))
    oracle = definitional_curvature(metric, x, y)
    r_closed = value_of(scalar_curvature_closed(alpha, beta, ctx))
    r_semi = scalar_curvature_semi(alpha, beta, ctx)
    gamma = gamma_decomposition(alpha, beta, ctx)
    reference_1, reference_2 = semi_gamma(alpha, beta, ctx)
    F, a = value_of(ctx.F), value_of(ctx.alpha)
    return [
        _row("ricci", x, y, oracle.ric, value_of(ricci_closed(alpha, beta, ctx)), tolerance),
        _row("scalar_route_agreement", x, y, r_semi, r_closed, tolerance),
        _row(
            "scalar_pieces_agreement",
            x,
            y,
            r_semi,
            value_of(scalar_curvature_pieces(alpha, beta, ctx)),
            tolerance,
        ),
        _row("scalar_semi_vs_definition", x, y, oracle.r, r_semi, tolerance),
        _scaled_row(
            "gamma_identity",
            x,
            y,
            4.0 * F**5 * r_closed,
            gamma.gamma_1 + a * gamma.gamma_2,
            GAMMA_IDENTITY_TOLERANCE,
        ),
        _scaled_row("gamma_1_route_agreement", x, y, reference_1, gamma.gamma_1, tolerance),
        _scaled_row("gamma_2_route_agreement", x, y, reference_2, gamma.gamma_2, tolerance),
    ]


def _verify_samples(
    metric: MetricDefinition, samples: int, seed: int
) -> list[tuple[tuple[float, ...], tuple[float, ...]]]:
    points = sample_points(metric, samples, seed, get_settings().sample_radius)
    directions = unit_directions(metric.n, max(len(points), 1), seed)
    return [(x, tuple(float(v) for v in u)) for x, u in zip(points, directions)]


def cmd_verify(
    metric: MetricDefinition,
    samples: int,
    seed: int,
    tolerance: float,
    parameters: dict[str, Any],
) -> tuple[ReportDocument, int]:
    settings = get_settings()
    document = ReportDocument(command="verify", metric_source=metric.source, parameters=parameters)
    pairs = _verify_samples(metric, samples, seed)
    document.points = [{"x": list(x), "y": list(y)} for x, y in pairs]

    started = time.perf_counter()
    for rows in sweep(pairs, lambda p: _point_checks(metric, p[0], p[1], tolerance)):
        document.checks.extend(rows)
    document.timings["curvature"] = time.perf_counter() - started

    if pairs:
        x0 = pairs[0][0]
        alpha = alpha_at(metric, x0)
        beta = beta_invariants(metric, x0, alpha)
        quadrature = sigma_bh_quadrature(
            metric, x0, settings.quadrature_nodes, settings.monte_carlo_samples, seed
        )
        volume_tolerance = tolerance if metric.n == 2 else MONTE_CARLO_TOLERANCE
        document.checks.append(
            _row("sigma_bh", x0, None, quadrature, sigma_bh(alpha, beta), volume_tolerance)
        )

        started = time.perf_counter()
        printed_rows: list[CheckRow] = []
        for x, _ in pairs[:DIVISIBILITY_POINTS]:
            division = check_eq_4_6(metric, x)
            printed = check_eq_4_6(metric, x, printed_coefficient=True)
            document.divisibility.append(
                {
                    "x": list(x),
                    **division.to_dict(),
                    "printed_relative_residual": printed.relative_residual,
                }
            )
            document.checks.append(
                CheckRow(
                    name="divisibility",
                    x=list(x),
                    error=division.relative_residual,
                    tolerance=division.tolerance,
                    passed=division.divisible,
                )
            )
            printed_rows.append(
                CheckRow(
                    name="divisibility_printed",
                    x=list(x),
                    error=printed.relative_residual,
                    tolerance=printed.tolerance,
                    passed=printed.divisible,
                )
            )
        record = coefficient_record(
            metric.n,
            len(printed_rows),
            max(r.error for r in printed_rows),
            max(c.error for c in document.checks if c.name == "divisibility"),
            printed_rows[0].tolerance,
        )
        for row in printed_rows:
            row.explained = not row.passed and record.verdict == "corrected"
        document.checks.extend(printed_rows)
        document.timings["divisibility"] = time.perf_counter() - started

        spec = conformal_scale(metric, CONFORMAL_SIGMA)
        for x, y in pairs[:DIVISIBILITY_POINTS]:
            result = check_conformal_S(spec, x, y, tolerance)
            document.checks.append(
                CheckRow(
                    name="conformal_s",
                    x=list(x),
                    y=list(y),
                    expected=result.parameters["s_scaled"],
                    actual=result.parameters["s_predicted"],
                    error=result.residual,
                    tolerance=tolerance,
                    passed=result.residual <= tolerance,
                )
            )

        started = time.perf_counter()
        for family in ("sigma", "gamma_printed"):
            document.term_diff.append(term_diff(metric, pairs, family, tolerance).to_dict())
        document.term_diff.append(record.to_dict())
        document.timings["term_diff"] = time.perf_counter() - started

    failed = document.failed_checks()
    document.passed = not failed
    document.summary = {
        "checks": len(document.checks),
        "failed": len(failed),
        "max_error": {
            name: max((c.error for c in document.checks if c.name == name), default=0.0)
            for name in sorted({c.name for c in document.checks})
        },
    }
    return document, 0 if document.passed else 1


def _classify_point(
    metric: MetricDefinition, x: Sequence[float], tolerance: float, samples: int, seed: int
) -> dict[str, Any]:
    implication = theorem_1_1_pipeline(metric, x, tolerance, samples, seed)
    return {
        "x": [float(v) for v in x],
        "isotropic_s": test_isotropic_S(metric, x, tolerance).to_dict(),
        "weakly_isotropic_r": implication.antecedent.to_dict(),
        "weak_einstein": fit_weak_einstein(metric, x, tolerance, samples, seed).to_dict(),
        "lemma_2_1": check_lemma_2_1(metric, x, tolerance, samples, seed).to_dict(),
        "theorem_1_1": {
            "implication_holds": implication.implication_holds,
            "note": implication.note,
        },
    }


def cmd_classify(
    metric: MetricDefinition,
    points: Sequence[Sequence[float]],
    samples: int,
    seed: int,
    tolerance: float,
    parameters: dict[str, Any],
) -> tuple[ReportDocument, int]:
    started = time.perf_counter()
    results = sweep(points, lambda x: _classify_point(metric, x, tolerance, samples, seed))
    violated = [r["x"] for r in results if not r["theorem_1_1"]["implication_holds"]]
    verdicts: dict[str, dict[str, int]] = {}
    for result in results:
        for test in ("isotropic_s", "weakly_isotropic_r", "weak_einstein", "lemma_2_1"):
            counts = verdicts.setdefault(test, {})
            verdict = result[test]["verdict"]
            counts[verdict] = counts.get(verdict, 0) + 1
    document = ReportDocument(
        command="classify",
        metric_source=metric.source,
        parameters=parameters,
        points=[{"x": [float(v) for v in x]} for x in points],
        classifications=results,
        summary={
            "verdicts": {k: dict(sorted(v.items())) for k, v in sorted(verdicts.items())},
            "implication_violations": violated,
            "c": [r["isotropic_s"]["parameters"]["c"] for r in results],
            "theta": [r["weakly_isotropic_r"]["parameters"]["theta"] for r in results],
        },
        passed=not violated,
    )
    document.timings["total"] = time.perf_counter() - started
    return document, 0 if document.passed else 1

