# ABOUTME: Group targets - which quantum group a functional lives on, and its ambient matrix size.
# ABOUTME: Shared by the parser, the gaussian domain and the quotient checks.

from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property

import numpy as np

from autobots_qgauss.common.errors import InvalidParameterError
from autobots_qgauss.domains.kernel.services import ComplexMatrix, as_matrix


class TargetKind(StrEnum):
    U_PLUS = "u_plus"
    O_PLUS = "o_plus"
    SP_PLUS = "sp_plus"
    U_CLASSICAL = "u_classical"
    TORUS = "torus"
    FREE_GROUP = "free_group"


def symplectic_form(n: int) -> ComplexMatrix:
    """J_N = [[0, I_N], [-I_N, 0]] of size 2N."""
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return as_matrix(np.block([[zero, eye], [-eye, zero]]))


@dataclass(frozen=True)
class GroupTarget:
    """A target quantum group of size N.

    `dim` is the size of the fundamental corepresentation: 2N for sp_plus, N otherwise.
    """

    kind: TargetKind
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", TargetKind(self.kind))
        if self.n < 1:
            raise InvalidParameterError(f"target size must be positive, got {self.n}")

    @classmethod
    def parse(cls, name: str, n: int) -> "GroupTarget":
        try:
            kind = TargetKind(name)
        except ValueError:
            known = ", ".join(k.value for k in TargetKind)
            raise InvalidParameterError(f"unknown target '{name}' (known: {known})") from None
        return cls(kind, n)

    @property
    def dim(self) -> int:
        return 2 * self.n if self.kind is TargetKind.SP_PLUS else self.n

    @property
    def is_free_group(self) -> bool:
        return self.kind is TargetKind.FREE_GROUP

    @cached_property
    def j(self) -> ComplexMatrix:
        """The symplectic form; only defined for sp_plus."""
        if self.kind is not TargetKind.SP_PLUS:
            raise InvalidParameterError(f"target {self.kind} carries no symplectic form")
        return symplectic_form(self.n)

    def __str__(self) -> str:
        return f"{self.kind.value}({self.n})"
