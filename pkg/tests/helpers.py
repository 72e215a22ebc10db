# ABOUTME: Shared test helpers importable by test modules and domain-level conftest.py files.

import json
from pathlib import Path
from typing import Any

import numpy as np

from autobots_qgauss.common.utils.formatting import to_jsonable
from autobots_qgauss.domains.gaussian.services import GaussianSpec
from autobots_qgauss.domains.words.services import Element, Letter


def u(i: int, j: int, starred: bool = False) -> Element:
    """The element u_ij (or u_ij*)."""
    return Element.of(Letter.u(i, j, starred))


def g(i: int, inverse: bool = False) -> Element:
    return Element.of(Letter.g(i, inverse))


def spec_document(spec: GaussianSpec) -> dict[str, Any]:
    return {
        "target": spec.target.kind.value,
        "n": spec.n,
        "L": to_jsonable(list(spec.kraus)),
        "H": to_jsonable(spec.h),
    }


def write_json(directory: Path, name: str, data: Any) -> Path:
    path = directory / name
    path.write_text(json.dumps(to_jsonable(data)), encoding="utf-8")
    return path


def max_dev(a: Any, b: Any) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b)), initial=0.0))
