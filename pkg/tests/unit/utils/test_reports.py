"""Unit tests for report rendering."""

import logging

import pytest

from qsl.utils import reports


def test_to_csv():
    """Check column order, float format and missing values."""
    rows = [
        {"b": 0.5, "a": 1, "c": None},
        {"b": 1 / 3, "a": 2, "c": None},
    ]
    assert reports.to_csv(rows, ["a", "b", "c"]) == "a,b,c\n1,0.500000,\n2,0.333333,\n"


def test_to_csv_header_only():
    """Check that an empty report still has its header."""
    assert reports.to_csv([], ["a", "b"]) == "a,b\n"


def test_to_json():
    """Check key order and the trailing newline."""
    assert reports.to_json({"b": 1, "a": [1]}) == '{\n  "a": [\n    1\n  ],\n  "b": 1\n}\n'


def test_to_json_refuses_nan():
    """Check that non-finite floats are not written."""
    with pytest.raises(ValueError, match="Out of range float"):
        reports.to_json({"a": float("nan")})


def test_emit_to_stdout(capsys):
    """Check that reports without a path go to stdout."""
    reports.emit("a,b\n")
    assert capsys.readouterr().out == "a,b\n"


def test_emit_to_file(tmp_path, caplog):
    """Check that reports are written to the given file."""
    logger = logging.getLogger("qsl.utils.reports")
    logger.handlers = [caplog.handler]  # add caplog handler to logger
    logger.setLevel(logging.INFO)
    path = tmp_path / "report.json"
    reports.emit("{}\n", str(path))
    assert path.read_text(encoding="utf-8") == "{}\n"
    assert f"report written to {path}" in caplog.text
