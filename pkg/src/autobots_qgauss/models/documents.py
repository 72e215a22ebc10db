# ABOUTME: Pydantic documents for the files the CLI reads: specs, (W, H) pairs and free-group data.
# ABOUTME: Complex entries are [re, im] pairs; plain numbers are read as real.

import json
from pathlib import Path
from typing import Annotated, Any, TypeVar

import numpy as np
import numpy.typing as npt
import yaml
from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, ValidationError

from autobots_qgauss.common.errors import DocumentError
from autobots_qgauss.common.utils.formatting import to_jsonable
from autobots_qgauss.domains.gaussian.services import GaussianSpec
from autobots_qgauss.domains.kernel.services import ComplexMatrix, TensorOperator, as_matrix
from autobots_qgauss.domains.targets.groups import GroupTarget, TargetKind


def _to_complex(value: Any) -> complex:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError(f"complex numbers are [re, im] pairs, got {value!r}")
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, bool) or not isinstance(value, (int, float, complex)):
        raise ValueError(f"expected a number or an [re, im] pair, got {value!r}")
    return complex(value)


ComplexIn = Annotated[complex, BeforeValidator(_to_complex)]
Matrix = list[list[ComplexIn]]
Tensor = list[list[list[list[ComplexIn]]]]


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


def _array(rows: list[Any], name: str) -> npt.NDArray[np.complex128]:
    try:
        return np.array(rows, dtype=np.complex128)
    except ValueError as exc:
        raise DocumentError(f"{name} is not a rectangular array: {exc}") from exc


def _matrix(rows: Matrix, size: int, name: str) -> ComplexMatrix:
    arr = _array(rows, name) if rows else np.zeros((0, 0), dtype=np.complex128)
    if arr.shape != (size, size):
        raise DocumentError(f"{name} must be {size}×{size}, got shape {arr.shape}")
    return as_matrix(arr)


class SpecDocument(_Document):
    """{"target", "n", "L": [matrix…], "H": matrix}"""

    target: TargetKind
    n: int = Field(gt=0)
    kraus: list[Matrix] = Field(default_factory=list, alias="L")
    h: Matrix | None = Field(default=None, alias="H")

    def to_spec(self) -> GaussianSpec:
        target = GroupTarget(self.target, self.n)
        dim = target.dim
        kraus = tuple(_matrix(k, dim, f"L_{r}") for r, k in enumerate(self.kraus, start=1))
        h = _matrix(self.h, dim, "H") if self.h is not None else as_matrix(np.zeros((dim, dim)))
        return GaussianSpec(target, kraus, h)

    @staticmethod
    def dump(spec: GaussianSpec) -> dict[str, Any]:
        return {
            "target": spec.target.kind.value,
            "n": spec.n,
            "L": to_jsonable(list(spec.kraus)),
            "H": to_jsonable(spec.h),
        }


class WHDocument(_Document):
    """{"target", "n", "W": w[a][b][c][d], "H": matrix}"""

    target: TargetKind
    n: int = Field(gt=0)
    w: Tensor = Field(alias="W")
    h: Matrix | None = Field(default=None, alias="H")

    @property
    def group_target(self) -> GroupTarget:
        return GroupTarget(self.target, self.n)

    def operator(self) -> TensorOperator:
        return _tensor(self.w, self.group_target.dim)

    def drift(self) -> ComplexMatrix:
        dim = self.group_target.dim
        return _matrix(self.h, dim, "H") if self.h is not None else as_matrix(np.zeros((dim, dim)))

    @staticmethod
    def dump(target: GroupTarget, w: TensorOperator, h: ComplexMatrix) -> dict[str, Any]:
        return {"target": target.kind.value, "n": target.n, "W": to_jsonable(w.w), "H": to_jsonable(h)}


def _tensor(rows: Tensor, size: int) -> TensorOperator:
    arr = _array(rows, "W")
    if arr.shape != (size,) * 4:
        raise DocumentError(f"W must have shape {(size,) * 4}, got {arr.shape}")
    return TensorOperator(arr)


class KrausDocument(_Document):
    """{"n", "W"}"""

    n: int = Field(gt=0)
    w: Tensor = Field(alias="W")

    def operator(self) -> TensorOperator:
        return _tensor(self.w, self.n)


class FreeGroupDocument(_Document):
    """{"n", "v": [vector…], "alpha": [scalar…]}"""

    n: int = Field(gt=0)
    v: list[list[ComplexIn]]
    alpha: list[ComplexIn]


DocumentT = TypeVar("DocumentT", bound=BaseModel)


def load_document(path: str | Path, model: type[DocumentT]) -> DocumentT:
    """Read a JSON (by suffix) or YAML file into `model`.

    Raises:
        DocumentError: If the file cannot be read, parsed or validated.
    """
    source = Path(path)
    try:
        text = source.read_text(encoding="utf-8")
        # YAML 1.1 reads exponents without a dot (1e-05) as strings
        data = json.loads(text) if source.suffix == ".json" else yaml.safe_load(text)
    except (OSError, ValueError, yaml.YAMLError) as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        raise DocumentError(f"{path} is not a valid {model.__name__}: {exc}") from exc
