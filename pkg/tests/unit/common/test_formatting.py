# ABOUTME: Unit tests for deterministic JSON rendering of reports.

import json

import numpy as np

from autobots_qgauss.common.tools.validation_tools import ConditionResult
from autobots_qgauss.common.utils.formatting import complex_pair, dumps_report, to_jsonable


def test_complex_pair_normalizes_negative_zero():
    """Test complex_pair drops the sign of zero parts."""
    pair = complex_pair(complex(-0.0, -0.0))
    assert pair == [0.0, 0.0]
    assert str(pair[0]) == "0.0"


def test_to_jsonable_converts_arrays_and_reports():
    """Test to_jsonable on complex arrays, numpy scalars and as_dict objects."""
    data = {
        "m": np.array([[1 + 2j, 0]]),
        "r": np.array([1.5, 2.0]),
        "flag": np.bool_(True),
        "k": np.int64(3),
        "c": ConditionResult("h", False, 0.5),
    }
    out = to_jsonable(data)
    assert out["m"] == [[[1.0, 2.0], [0.0, 0.0]]]
    assert out["r"] == [1.5, 2.0]
    assert out["flag"] is True
    assert out["k"] == 3
    assert out["c"] == {"name": "h", "passed": False, "residual": 0.5}


def test_dumps_report_sorted_keys_and_newline():
    """Test keys are sorted and the text ends with a newline."""
    text = dumps_report({"b": 1, "a": [0.1, 2.0]})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": [0.1, 2.0], "b": 1}


def test_dumps_report_uses_17_significant_digits():
    text = dumps_report({"x": 0.1})
    assert "0.10000000000000001" in text


def test_dumps_report_keeps_integral_floats_as_floats():
    text = dumps_report({"x": -1.0, "n": 2})
    assert '"x": -1.0' in text
    assert '"n": 2' in text


def test_dumps_report_is_deterministic():
    data = {"value": complex(-1, 0), "rows": [{"p": 1, "v": 1j}]}
    assert dumps_report(data) == dumps_report(dict(reversed(list(data.items()))))
