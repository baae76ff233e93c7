"""randers-lab command line: report, verify and classify."""

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any, Optional

from cli.commands import cmd_classify, cmd_report, cmd_verify
from cli.document import ReportDocument
from cli.jsonio import write_document
from cli.parsing import parse_grid, parse_params, parse_point
from classify.sampling import sample_points
from config.settings import get_settings, reload_settings
from exprlang.builtins import BUILTIN_NAMES, builtin_metric
from exprlang.metric import MetricDefinition, load_metric_file
from startup.initialization import initialize_logging
from utils.errors import InputError, InvalidParameterError, RandersLabError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="randers-lab", description="Curvature laboratory for Randers metrics"
    )
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group(required=True)
    source.add_argument("--metric", type=Path, help="Metric definition file")
    source.add_argument("--builtin", choices=BUILTIN_NAMES, help="Builtin metric family")
    common.add_argument("--param", action="append", default=[], help="Builtin parameter k=v (repeatable)")
    common.add_argument("--samples", type=int, default=None, help="Sample count (default from settings)")
    common.add_argument("--seed", type=int, default=None, help="Sampling seed (default from settings)")
    common.add_argument("--tol", type=float, default=None, help="Holds tolerance (default 1e-6)")
    common.add_argument("--json", dest="json_path", default=None, help="Write the JSON document to PATH, or - for stdout")
    common.add_argument("--quiet", action="store_true", help="Suppress the text rendering")
    common.add_argument("--verbose", action="store_true", help="Debug logging")
    common.add_argument("--config", type=Path, default=None, help="JSON settings file")

    commands = parser.add_subparsers(dest="command", required=True)
    report = commands.add_parser("report", parents=[common], help="All curvatures at one (x, y)")
    report.add_argument("--at", required=True, help='Point "x=<csv>;y=<csv>"')
    commands.add_parser("verify", parents=[common], help="Closed formulas against the oracles")
    classify = commands.add_parser("classify", parents=[common], help="Metric-class tests on points")
    where = classify.add_mutually_exclusive_group()
    where.add_argument("--grid", help='Grid "x1=lo:hi:steps,..."')
    where.add_argument("--at", help='Single point "x=<csv>;y=<csv>" (y is ignored)')
    return parser


def load_metric(args: argparse.Namespace) -> tuple[MetricDefinition, dict[str, Any]]:
    if args.metric is not None:
        if args.param:
            raise InvalidParameterError("--param only applies to --builtin metrics")
        return load_metric_file(args.metric), {"metric": str(args.metric)}
    params = parse_params(args.param)
    return builtin_metric(args.builtin, params), {"builtin": args.builtin, **params}


def render_text(document: ReportDocument) -> str:
    lines = [f"{document.command}: {document.metric_source}"]
    for key, value in document.summary.items():
        lines.append(f"  {key}: {value}")
    for check in document.failed_checks():
        lines.append(f"  FAILED {check.name} at x={check.x}: error {check.error:.3e} > {check.tolerance:.1e}")
    lines.append("  passed" if document.passed else "  failed")
    return "\n".join(lines)


def run(args: argparse.Namespace) -> int:
    settings = get_settings()
    metric, parameters = load_metric(args)
    samples = settings.default_samples if args.samples is None else args.samples
    seed = settings.default_seed if args.seed is None else args.seed
    tolerance = settings.holds_tolerance if args.tol is None else args.tol
    if samples < 1 or tolerance <= 0.0:
        raise InvalidParameterError("--samples must be positive and --tol above zero")
    parameters = {**parameters, "samples": samples, "seed": seed, "tol": tolerance}

    if args.command == "report":
        x, y = parse_point(args.at, metric.n)
        document, code = cmd_report(metric, x, y, parameters)
    elif args.command == "verify":
        document, code = cmd_verify(metric, samples, seed, tolerance, parameters)
    else:
        if args.grid:
            points = parse_grid(args.grid, metric.n)
        elif args.at:
            points = [tuple(parse_point(args.at, metric.n)[0])]
        else:
            points = sample_points(metric, samples, seed, settings.sample_radius)
        for x in points:
            metric.validate_at(x)
        document, code = cmd_classify(metric, points, samples, seed, tolerance, parameters)

    text = write_document(document, args.json_path)
    if args.json_path == "-":
        sys.stdout.write(text)
    elif not args.quiet:
        print(render_text(document))
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings = reload_settings(args.config) if args.config else get_settings()
    initialize_logging(settings, args.verbose)
    try:
        return run(args)
    except InputError as e:
        logger.error(f"Invalid input: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except RandersLabError as e:
        logger.error(f"Internal check failed: {e}")
        print(f"check failed: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
