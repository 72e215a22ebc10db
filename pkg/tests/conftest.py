# ABOUTME: Pytest fixtures and configuration for autobots-qgauss tests.
# ABOUTME: Provides the running example specs, seeded generators and settings isolation.

from collections.abc import Generator

import numpy as np
import pytest

from autobots_qgauss.common.tools.registry import _reset_commands
from autobots_qgauss.configs.settings import _reset_app_settings
from autobots_qgauss.domains.gaussian.services import CookedFunctional, GaussianSpec, cook
from autobots_qgauss.domains.targets.groups import GroupTarget, TargetKind

ROTATION = np.array([[0, 1], [-1, 0]], dtype=np.complex128)

_QG_ENV_VARS = [
    "QG_TOL",
    "QG_EXPANSION_GUARD",
    "QG_SEED",
    "QG_LOG_LEVEL",
    "QG_APP_NAME",
    "QG_CENTRAL_CUTOFF",
    "QG_DEFAULT_PMAX",
]


@pytest.fixture(autouse=True)
def _isolated_settings(monkeypatch) -> Generator[None, None, None]:
    """Drop cached settings and registered commands; ignore QG_* from the outer environment."""
    for var in _QG_ENV_VARS:
        monkeypatch.delenv(var, raising=False)
    _reset_app_settings()
    _reset_commands()
    yield
    _reset_app_settings()
    _reset_commands()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def running_spec() -> GaussianSpec:
    """O_2⁺ spec with L = [[0, 1], [-1, 0]] and H = 0."""
    return GaussianSpec.create(GroupTarget(TargetKind.O_PLUS, 2), [ROTATION])


@pytest.fixture
def running(running_spec: GaussianSpec) -> CookedFunctional:
    return cook(running_spec)


@pytest.fixture
def symplectic_spec() -> GaussianSpec:
    """Sp(1) spec with L = diag(1, -1) and H = diag(i, -i)."""
    return GaussianSpec.create(
        GroupTarget(TargetKind.SP_PLUS, 1), [np.diag([1, -1])], np.diag([1j, -1j])
    )
