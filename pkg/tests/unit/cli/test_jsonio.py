"""Tests for the deterministic JSON encoder."""

import json
import math
from pathlib import Path

import numpy as np
import pytest

from cli.document import CheckRow, ReportDocument
from cli.jsonio import encode, write_document


class TestEncode:
    """Test scalar and container encoding."""

    def test_floats_keep_17_digits(self) -> None:
        """Test the float format."""
        assert encode(0.1) == "0.10000000000000001"
        assert encode(2.0) == "2.0"
        assert encode(np.float64(1e-20)) == "9.9999999999999995e-21"

    def test_non_finite_is_null(self) -> None:
        """Test that NaN and infinities become null."""
        assert encode([math.nan, math.inf]) == "[\n  null,\n  null\n]"

    def test_scalars(self) -> None:
        """Test booleans, integers, strings and None."""
        assert encode(True) == "true"
        assert encode(np.bool_(False)) == "false"
        assert encode(np.int64(3)) == "3"
        assert encode("a\"b") == '"a\\"b"'
        assert encode(None) == "null"

    def test_mapping_order_is_kept(self) -> None:
        """Test that keys are written in insertion order."""
        text = encode({"z": 1, "a": np.array([0.5])})
        assert list(json.loads(text)) == ["z", "a"]
        assert json.loads(text)["a"] == [0.5]

    def test_empty_containers(self) -> None:
        """Test empty lists and mappings."""
        assert encode({"a": [], "b": {}}) == '{\n  "a": [],\n  "b": {}\n}'

    def test_unknown_type(self) -> None:
        """Test that arbitrary objects are rejected."""
        with pytest.raises(TypeError, match="object"):
            encode(object())


class TestWriteDocument:
    """Test writing report documents."""

    @pytest.fixture()
    def document(self) -> ReportDocument:
        """A document with one failed check."""
        row = CheckRow(name="ricci", x=[0.1], error=1.0, tolerance=1e-6, passed=False)
        return ReportDocument(command="verify", metric_source="inline", checks=[row], passed=False)

    def test_write_to_path(self, document: ReportDocument, tmp_path: Path) -> None:
        """Test that the file and the returned text agree."""
        destination = tmp_path / "report.json"
        text = write_document(document, str(destination))
        assert destination.read_text() == text
        data = json.loads(text)
        assert data["tool"] == "randers-lab"
        assert data["checks"][0]["name"] == "ricci"

    def test_dash_writes_nothing(self, document: ReportDocument, tmp_path: Path) -> None:
        """Test that - only returns the text."""
        assert write_document(document, "-").endswith("}\n")

    def test_failed_checks(self, document: ReportDocument) -> None:
        """Test that explained rows are not counted as failures."""
        assert len(document.failed_checks()) == 1
        document.checks[0].explained = True
        assert document.failed_checks() == []
