# ABOUTME: Formatting utilities for converting reports to deterministic JSON text.
# ABOUTME: Complex numbers become [re, im] pairs, floats use 17 significant digits, keys are sorted.

import json
import math
from collections.abc import Mapping
from typing import Any

import numpy as np

FLOAT_FORMAT = ".17g"


def complex_pair(value: complex) -> list[float]:
    """[re, im] with negative zero normalized to zero."""
    z = complex(value)
    return [z.real + 0.0, z.imag + 0.0]


def to_jsonable(data: Any) -> Any:
    """Convert numpy arrays, complex numbers and dataclass-like reports to plain JSON values.

    Complex scalars (and complex arrays, entrywise) become [re, im] pairs; real
    numpy scalars become floats or ints; tuples become lists.
    """
    if isinstance(data, Mapping):
        return {str(k): to_jsonable(v) for k, v in data.items()}
    if isinstance(data, np.ndarray):
        if np.iscomplexobj(data):
            return to_jsonable(data.tolist())
        return data.tolist()
    if isinstance(data, (list, tuple)):
        return [to_jsonable(v) for v in data]
    if isinstance(data, (bool, np.bool_)):
        return bool(data)
    if isinstance(data, (complex, np.complexfloating)):
        return complex_pair(complex(data))
    if isinstance(data, np.integer):
        return int(data)
    if isinstance(data, np.floating):
        return float(data)
    if hasattr(data, "as_dict"):
        return to_jsonable(data.as_dict())
    return data


def _format_float(value: float) -> str:
    if math.isnan(value):
        return "NaN"
    if math.isinf(value):
        return "Infinity" if value > 0 else "-Infinity"
    text = format(value + 0.0, FLOAT_FORMAT)
    if text.lstrip("-").isdigit():
        # keep the float visibly a float
        text += ".0"
    return text


def _emit(value: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    close = " " * (indent * level)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [
            f"{pad}{json.dumps(key)}: {_emit(value[key], indent, level + 1)}"
            for key in sorted(value)
        ]
        return "{\n" + ",\n".join(items) + "\n" + close + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        if all(not isinstance(v, (dict, list)) for v in value):
            return "[" + ", ".join(_emit(v, indent, level + 1) for v in value) + "]"
        items = [f"{pad}{_emit(v, indent, level + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + close + "]"
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return json.dumps(value)
    if isinstance(value, float):
        return _format_float(value)
    raise TypeError(f"cannot render {type(value).__name__} as JSON")


def dumps_report(data: Any, indent: int = 2) -> str:
    """Render a report as deterministic JSON text with a trailing newline."""
    return _emit(to_jsonable(data), indent, 0) + "\n"
