"""Tests for option schemas and input files."""
from __future__ import annotations

import json

import pytest
import voluptuous as vol

from carter_linkage.config import (
    load_diagram,
    load_matrix,
    validate_export_options,
    validate_verify_options,
)
from carter_linkage.const import (
    CONF_CRITERION_DIAGRAMS,
    CONF_FORMAT,
    CONF_OUT,
    CONF_SAMPLES,
    CONF_SEED,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
)
from carter_linkage.diagram import partial_cartan
from carter_linkage.exceptions import InvalidDiagramError, ParseError
from carter_linkage.linalg import RatMatrix


class TestVerifyOptions:
    """Tests for the verify schema."""

    def test_defaults(self):
        """Test optional keys are filled in."""
        options = validate_verify_options({"suites": ["table1"]})
        assert options[CONF_SAMPLES] == DEFAULT_SAMPLES
        assert options[CONF_SEED] == DEFAULT_SEED
        assert options[CONF_CRITERION_DIAGRAMS] == []

    def test_unknown_suite(self):
        """Test suite names are checked."""
        with pytest.raises(vol.Invalid):
            validate_verify_options({"suites": ["table2"]})

    def test_empty_suites(self):
        """Test at least one suite."""
        with pytest.raises(vol.Invalid):
            validate_verify_options({"suites": []})

    def test_samples_coerced(self):
        """Test samples are coerced and must be positive."""
        assert validate_verify_options({"suites": ["dual"], "samples": "5"})[CONF_SAMPLES] == 5
        with pytest.raises(vol.Invalid):
            validate_verify_options({"suites": ["dual"], "samples": 0})


class TestExportOptions:
    """Tests for the export schema."""

    def test_defaults(self):
        """Test json output to stdout by default."""
        options = validate_export_options({"what": "diagram", "name": "D5"})
        assert options[CONF_FORMAT] == "json"
        assert options[CONF_OUT] is None

    def test_format_support(self):
        """Test objects only accept their formats."""
        with pytest.raises(vol.Invalid):
            validate_export_options({"what": "roots", "name": "E6", "format": "dot"})

    def test_unknown_object(self):
        """Test exportable objects are checked."""
        with pytest.raises(vol.Invalid):
            validate_export_options({"what": "weights", "name": "E6"})


class TestLoadDiagram:
    """Tests for diagram files."""

    def test_load(self, diagram_file, d5_a1):
        """Test an exported diagram reads back with the same B_Γ."""
        d = load_diagram(diagram_file)
        assert d.name == "D5(a1)"
        assert partial_cartan(d).matrix == partial_cartan(d5_a1).matrix
        assert d.class_type == d5_a1.class_type

    def test_bad_json(self, tmp_path):
        """Test malformed JSON."""
        path = tmp_path / "bad.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(ParseError):
            load_diagram(path)

    def test_bad_sign(self, tmp_path):
        """Test edge signs are validated by the schema."""
        path = tmp_path / "sign.json"
        path.write_text(
            json.dumps({"name": "x", "alpha": ["a"], "beta": ["b"], "edges": [[0, 1, 2]]}),
            encoding="utf-8",
        )
        with pytest.raises(vol.Invalid):
            load_diagram(path)

    def test_duplicate_names(self, tmp_path):
        """Test vertex names must be unique."""
        path = tmp_path / "dup.json"
        path.write_text(
            json.dumps({"name": "x", "alpha": ["a"], "beta": ["a"], "edges": [[0, 1, -1]]}),
            encoding="utf-8",
        )
        with pytest.raises(vol.Invalid):
            load_diagram(path)

    def test_edge_out_of_range(self, tmp_path):
        """Test edges must fit the listed vertices."""
        path = tmp_path / "range.json"
        path.write_text(
            json.dumps({"name": "x", "alpha": ["a"], "beta": ["b"], "edges": [[0, 4, -1]]}),
            encoding="utf-8",
        )
        with pytest.raises(InvalidDiagramError):
            load_diagram(path)


class TestLoadMatrix:
    """Tests for matrix files."""

    def test_lines_and_comments(self, matrix_file):
        """Test one row per line with comments skipped."""
        assert load_matrix(matrix_file) == RatMatrix.parse("2 1; 1 2")

    def test_semicolons(self, tmp_path):
        """Test rows separated by semicolons on one line."""
        path = tmp_path / "m.txt"
        path.write_text("2 -1; -1 2\n", encoding="utf-8")
        assert load_matrix(path) == RatMatrix.parse("2 -1; -1 2")
