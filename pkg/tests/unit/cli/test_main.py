"""Tests for the randers-lab entry point and its exit codes."""

import json
from pathlib import Path

import pytest

from cli import main as cli_main
from cli.document import ReportDocument
from cli.main import EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_OK, main
from tests.unit.cli.test_cli_constants import (
    CLASSIFY_AT,
    EXAMPLE_AT,
    EXPECTED_S_OVER_F,
    SMALL_SAMPLES,
)


def run_json(capsys: pytest.CaptureFixture, argv: list[str]) -> tuple[int, dict]:
    code = main([*argv, "--json", "-"])
    return code, json.loads(capsys.readouterr().out)


class TestReport:
    """Test the report subcommand."""

    def test_example_report(self, capsys: pytest.CaptureFixture) -> None:
        """Test S/F = 0.9 for the isotropic-S family."""
        code, data = run_json(capsys, ["report", "--builtin", "example_1_1", "--at", EXAMPLE_AT])
        assert code == EXIT_OK
        assert data["command"] == "report"
        assert data["summary"]["s_over_f"] == pytest.approx(EXPECTED_S_OVER_F, rel=1e-8)
        assert data["parameters"]["builtin"] == "example_1_1"

    def test_sphere_file(self, capsys: pytest.CaptureFixture, metrics_dir: Path) -> None:
        """Test r = 2 for the shipped sphere file."""
        code, data = run_json(
            capsys, ["report", "--metric", str(metrics_dir / "sphere.fmt"), "--at", "x=0.2,0.1;y=1,0"]
        )
        assert code == EXIT_OK
        assert data["summary"]["r_closed"] == pytest.approx(2.0, rel=1e-9)
        assert data["summary"]["s_over_f"] == pytest.approx(0.0, abs=1e-12)

    def test_text_rendering(self, capsys: pytest.CaptureFixture) -> None:
        """Test the human-readable output."""
        code = main(["report", "--builtin", "funk", "--at", "x=0.1,0.2;y=1,0"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert out.startswith("report: builtin:funk")
        assert "passed" in out

    def test_quiet(self, capsys: pytest.CaptureFixture, tmp_path: Path) -> None:
        """Test --quiet with a JSON file."""
        destination = tmp_path / "out.json"
        code = main(
            ["report", "--builtin", "funk", "--at", "x=0.1,0.2;y=1,0", "--quiet", "--json", str(destination)]
        )
        assert code == EXIT_OK
        assert capsys.readouterr().out == ""
        assert json.loads(destination.read_text())["command"] == "report"


class TestClassify:
    """Test the classify subcommand."""

    def test_example_point(self, capsys: pytest.CaptureFixture) -> None:
        """Test that the isotropic-S family passes every class test at one point."""
        code, data = run_json(
            capsys,
            ["classify", "--builtin", "example_1_1", "--at", CLASSIFY_AT, "--samples", SMALL_SAMPLES],
        )
        assert code == EXIT_OK
        assert data["summary"]["implication_violations"] == []
        result = data["classifications"][0]
        assert result["isotropic_s"]["verdict"] == "holds"
        assert result["weakly_isotropic_r"]["verdict"] == "holds"
        assert data["summary"]["c"] == [pytest.approx(0.3, rel=1e-9)]

    def test_deterministic(self, capsys: pytest.CaptureFixture) -> None:
        """Test that two runs agree apart from timings."""
        argv = ["classify", "--builtin", "random_poly", "--param", "seed=2", "--samples", SMALL_SAMPLES,
                "--grid", "x1=-0.1:0.1:2"]
        _, first = run_json(capsys, argv)
        _, second = run_json(capsys, argv)
        first.pop("timings")
        second.pop("timings")
        assert first == second


class TestVerify:
    """Test the verify subcommand."""

    def test_sphere_passes(self, capsys: pytest.CaptureFixture) -> None:
        """Test that every check passes on the round sphere."""
        code, data = run_json(capsys, ["verify", "--builtin", "sphere_alpha", "--samples", "2"])
        assert code == EXIT_OK
        assert data["passed"] is True
        assert data["summary"]["failed"] == 0
        assert {"ricci", "scalar_route_agreement", "sigma_bh", "divisibility"} <= set(
            data["summary"]["max_error"]
        )

    def test_failed_document_exits_one(
        self, capsys: pytest.CaptureFixture, monkeypatch: pytest.MonkeyPatch
    ) -> None:
        """Test that a failing verification maps to exit code 1."""
        failed = ReportDocument(command="verify", metric_source="stub", passed=False)
        monkeypatch.setattr(cli_main, "cmd_verify", lambda *args: (failed, 1))
        assert main(["verify", "--builtin", "sphere_alpha", "--quiet"]) == EXIT_CHECK_FAILED


class TestInputErrors:
    """Test exit code 2 for bad input."""

    @pytest.mark.parametrize(
        "argv",
        [
            ["report", "--builtin", "funk", "--at", "x=0.1;y=1,0"],
            ["report", "--builtin", "funk", "--at", "x=1.5,0;y=1,0"],
            ["report", "--builtin", "example_1_1", "--param", "n=9", "--at", EXAMPLE_AT],
            ["report", "--metric", "missing.fmt", "--at", EXAMPLE_AT],
            ["report", "--metric", "missing.fmt", "--param", "n=2", "--at", EXAMPLE_AT],
            ["verify", "--builtin", "funk", "--tol", "0"],
            ["classify", "--builtin", "funk", "--samples", "3", "--at", "x=0.1,0.1;y=1,0"],
        ],
    )
    def test_exit_two(self, capsys: pytest.CaptureFixture, argv: list[str]) -> None:
        """Test that input problems exit with code 2 and a message on stderr."""
        assert main(argv) == EXIT_INPUT_ERROR
        assert "error: " in capsys.readouterr().err

    def test_argparse_usage_error(self) -> None:
        """Test that a missing metric source is a usage error."""
        with pytest.raises(SystemExit) as excinfo:
            main(["report", "--at", EXAMPLE_AT])
        assert excinfo.value.code == 2
