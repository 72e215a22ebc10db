# ABOUTME: Unit tests for the random spec generators used by sweeps and the self-test command.

import numpy as np
import pytest

from autobots_qgauss.domains.gaussian.sampling import (
    random_base_spec,
    random_centered_family,
    random_target_spec,
    random_unitary,
    unitary_mix,
)
from autobots_qgauss.domains.gaussian.services import validate
from autobots_qgauss.domains.targets.groups import GroupTarget, TargetKind
from autobots_qgauss.domains.words.services import counit
from tests.helpers import max_dev


@pytest.mark.parametrize("dim", [1, 2, 4])
def test_random_unitary_is_unitary(dim, rng):
    v = random_unitary(dim, rng)
    assert max_dev(v @ v.conj().T, np.eye(dim)) < 1e-12


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_random_base_spec_passes_base_checks(d, rng):
    spec = random_base_spec(GroupTarget(TargetKind.U_PLUS, 3), d, rng)
    assert spec.d == d
    assert validate(spec).passed


@pytest.mark.parametrize("kind", list(TargetKind))
@pytest.mark.parametrize("d", [1, 2, 3])
def test_random_target_spec_passes_target_checks(kind, d, rng):
    target = GroupTarget(kind, 2)
    for _ in range(3):
        spec = random_target_spec(target, d, rng)
        assert spec.target == target
        assert spec.d == d
        assert validate(spec).passed


def test_same_seed_same_spec():
    target = GroupTarget(TargetKind.SP_PLUS, 2)
    a = random_target_spec(target, 3, np.random.default_rng(7))
    b = random_target_spec(target, 3, np.random.default_rng(7))
    assert all(np.array_equal(x, y) for x, y in zip(a.kraus, b.kraus, strict=True))
    assert np.array_equal(a.h, b.h)


def test_unitary_mix_keeps_drift_and_size(rng):
    spec = random_target_spec(GroupTarget(TargetKind.O_PLUS, 2), 2, rng)
    mixed = unitary_mix(spec, rng)
    assert mixed.d == spec.d
    assert np.array_equal(mixed.h, spec.h)
    assert mixed.diffusion().allclose(spec.diffusion(), atol=1e-10)


def test_random_centered_family(rng):
    family = random_centered_family(2, 8, rng, max_length=3)
    assert len(family) == 8
    assert all(abs(counit(e)) < 1e-12 for e in family)
