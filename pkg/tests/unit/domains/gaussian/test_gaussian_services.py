# ABOUTME: Unit tests for gaussian services - validation, cooking, evaluation of φ and η, (W, H) conversions.
# ABOUTME: Random specs come from the sampling module with seeded generators.

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autobots_qgauss.common.errors import (
    AntiHermitianError,
    BalanceError,
    InvalidParameterError,
    NotCenteredError,
    NotPositiveError,
    ShapeError,
    TargetConditionError,
)
from autobots_qgauss.configs.settings import _reset_app_settings
from autobots_qgauss.domains.gaussian.sampling import (
    random_base_spec,
    random_centered_family,
    random_target_spec,
    unitary_mix,
)
from autobots_qgauss.domains.gaussian.services import (
    GaussianSpec,
    canonical_spec,
    coboundary,
    cook,
    drift_space,
    eval_eta,
    eval_phi,
    eval_phi_recursive,
    from_free_group_data,
    from_WH,
    gram,
    group_embedding,
    is_driftless,
    to_WH,
    validate,
)
from autobots_qgauss.domains.kernel.services import TensorOperator, matrix_unit
from autobots_qgauss.domains.targets.groups import GroupTarget, TargetKind
from autobots_qgauss.domains.words.services import (
    Element,
    Letter,
    antipode_element,
    centered,
    counit,
    generators,
    group_generators,
    star,
    words_up_to,
)
from tests.conftest import ROTATION
from tests.helpers import g, max_dev, u

U2 = GroupTarget(TargetKind.U_PLUS, 2)
O2 = GroupTarget(TargetKind.O_PLUS, 2)
seeds = st.integers(min_value=0, max_value=2**32 - 1)


def _random_element(rng, letters, terms=3, max_length=3):
    x = Element.zero()
    for _ in range(terms):
        length = int(rng.integers(0, max_length + 1))
        word = tuple(letters[int(k)] for k in rng.integers(0, len(letters), size=length))
        x = x + Element.from_word(word, complex(*rng.standard_normal(2)))
    return x


class TestSpecAndValidation:
    def test_spec_rejects_wrong_shapes(self):
        with pytest.raises(ShapeError, match="H must be 2×2"):
            GaussianSpec.create(U2, [ROTATION], np.zeros((3, 3)))
        with pytest.raises(ShapeError, match="L_1"):
            GaussianSpec.create(U2, [np.eye(3)])

    def test_running_spec_passes(self, running_spec):
        """Test the rotation with H = 0 passes every base and O⁺ condition."""
        report = validate(running_spec)
        assert report.passed
        assert report.rank == 1
        assert report.independent
        assert {c.name for c in report.base} == {"h_anti_hermitian", "balance", "cp_unital_balance"}

    def test_unbalanced_kraus_fails(self):
        """Test L = e_12: L*L = e_22 differs from LL* = e_11."""
        report = validate(GaussianSpec.create(U2, [matrix_unit(2, 1, 2)]))
        failed = {c.name for c in report.base if not c.passed}
        assert failed == {"balance", "cp_unital_balance"}
        assert not report.passed

    def test_non_anti_hermitian_drift_fails(self):
        report = validate(GaussianSpec.create(U2, [np.eye(2)], matrix_unit(2, 1, 2)))
        (failed,) = [c for c in report.base if not c.passed]
        assert failed.name == "h_anti_hermitian"
        assert failed.residual == pytest.approx(1.0)

    def test_dependent_family_is_reported(self):
        report = validate(GaussianSpec.create(O2, [ROTATION, ROTATION]))
        assert report.passed
        assert report.rank == 1
        assert not report.independent

    def test_report_as_dict(self, running_spec):
        data = validate(running_spec).as_dict()
        assert data["target"] == "o_plus"
        assert data["n"] == 2
        assert data["passed"] is True
        assert len(data["target_conditions"]) == 4


class TestCook:
    def test_running_spec_tables(self, running):
        """Test φ(u_11) = -1/2, ∂φ(u_12* ⊗ u_12) = 1, ∂φ(u_11 ⊗ u_22) = 0."""
        assert running.phi(Letter.u(1, 1)) == pytest.approx(-0.5)
        assert running.pair_kernel(Letter.u(1, 2, True), Letter.u(1, 2)) == pytest.approx(1.0)
        assert running.pair_kernel(Letter.u(1, 1), Letter.u(2, 2)) == 0
        assert max_dev(running.first_order_matrix(), -0.5 * np.eye(2)) < 1e-15
        assert running.d == 1

    def test_pure_drift(self):
        h = np.diag([1j, -1j])
        f = cook(GaussianSpec.create(U2, [], h))
        assert max_dev(f.first_order_matrix(), h) == 0
        assert max_dev(f.first_order_matrix(starred=True), h.conj()) == 0
        assert not np.any(f.pair)
        assert f.d == 0

    def test_unbalanced_spec_is_rejected(self):
        with pytest.raises(BalanceError) as excinfo:
            cook(GaussianSpec.create(U2, [matrix_unit(2, 1, 2)]))
        assert excinfo.value.residual == pytest.approx(1.0)

    def test_drift_is_made_anti_hermitian(self):
        f = cook(GaussianSpec.create(U2, [], matrix_unit(2, 1, 2)))
        assert f.phi(Letter.u(1, 2)) == pytest.approx(0.5)
        assert f.phi(Letter.u(2, 1)) == pytest.approx(-0.5)

    def test_letter_outside_tables(self, running):
        with pytest.raises(InvalidParameterError, match="outside the tables"):
            running.phi(Letter.g(1))
        with pytest.raises(InvalidParameterError):
            running.phi(Letter.u(3, 1))

    def test_tolerance_comes_from_settings(self, monkeypatch):
        """Test a loose QG_TOL lets a slightly unbalanced spec through."""
        spec = GaussianSpec.create(U2, [1e-4 * matrix_unit(2, 1, 2)])
        with pytest.raises(BalanceError):
            cook(spec)
        monkeypatch.setenv("QG_TOL", "1e-5")
        _reset_app_settings()
        assert cook(spec).d == 1


class TestEvaluation:
    def test_phi_of_unit_is_zero(self, running):
        assert eval_phi(running, Element.unit()) == 0
        assert eval_phi(running, Element.zero()) == 0

    def test_phi_of_diagonal_product(self, running):
        """Test φ(u_11 u_22) = -1/2 - 1/2 + 0 = -1."""
        assert eval_phi(running, u(1, 1) * u(2, 2)) == pytest.approx(-1.0)
        assert eval_phi_recursive(running, u(1, 1) * u(2, 2)) == pytest.approx(-1.0)

    def test_vanishes_on_products_of_three_centered_letters(self, running):
        assert abs(eval_phi(running, u(1, 2) * u(2, 1) * u(1, 2))) < 1e-12
        a, b, c = centered(Letter.u(1, 1)), centered(Letter.u(2, 2, True)), u(1, 2)
        assert abs(eval_phi(running, a * b * c)) < 1e-12

    @given(seeds)
    @settings(max_examples=40, deadline=None)
    def test_vanishes_on_random_k3(self, seed):
        """Test φ(abc) = 0 on seven centered triples per spec, 280 triples over 40 specs."""
        rng = np.random.default_rng(seed)
        f = cook(random_base_spec(U2, int(rng.integers(0, 4)), rng))
        scale = max(1.0, float(np.max(np.abs(f.pair), initial=0.0))) ** 2
        for _ in range(7):
            a, b, c = random_centered_family(2, 3, rng)
            assert abs(eval_phi(f, a * b * c)) < 1e-9 * scale

    @given(seeds)
    @settings(max_examples=30, deadline=None)
    def test_pair_formula_matches_recursion(self, seed):
        rng = np.random.default_rng(seed)
        f = cook(random_base_spec(U2, int(rng.integers(0, 4)), rng))
        x = _random_element(rng, generators(2), terms=4, max_length=4)
        assert eval_phi(f, x) == pytest.approx(eval_phi_recursive(f, x), abs=1e-9)

    @given(seeds)
    @settings(max_examples=30, deadline=None)
    def test_phi_is_hermitian(self, seed):
        rng = np.random.default_rng(seed)
        f = cook(random_base_spec(U2, 2, rng))
        x = _random_element(rng, generators(2))
        assert eval_phi(f, star(x)) == pytest.approx(np.conj(eval_phi(f, x)), abs=1e-9)

    def test_eta_examples(self, running):
        assert max_dev(eval_eta(running, u(1, 2)), [1]) == 0
        assert max_dev(eval_eta(running, u(1, 1) * u(1, 2)), eval_eta(running, u(1, 2))) == 0
        assert max_dev(eval_eta(running, u(1, 2) * u(2, 1)), [0]) == 0
        assert max_dev(eval_eta(running, u(1, 2, starred=True)), [1]) == 0

    @given(seeds)
    @settings(max_examples=30, deadline=None)
    def test_eta_is_a_derivation(self, seed):
        """Test η(ab) = ε(a)η(b) + η(a)ε(b)."""
        rng = np.random.default_rng(seed)
        f = cook(random_base_spec(U2, 3, rng))
        a = _random_element(rng, generators(2))
        b = _random_element(rng, generators(2))
        expected = counit(a) * eval_eta(f, b) + eval_eta(f, a) * counit(b)
        assert max_dev(eval_eta(f, a * b), expected) < 1e-9

    def test_coboundary_examples(self, running):
        assert coboundary(running, Element.unit(), u(1, 2) * u(2, 1)) == 0
        assert coboundary(running, u(1, 2, starred=True), u(1, 2)) == pytest.approx(1.0)

    @given(seeds)
    @settings(max_examples=30, deadline=None)
    def test_coboundary_is_bilinear_and_given_by_eta(self, seed):
        rng = np.random.default_rng(seed)
        f = cook(random_base_spec(U2, 2, rng))
        a, a2, b = (_random_element(rng, generators(2)) for _ in range(3))
        s = complex(*rng.standard_normal(2))
        lhs = coboundary(f, a + s * a2, b)
        rhs = coboundary(f, a, b) + s * coboundary(f, a2, b)
        assert lhs == pytest.approx(rhs, abs=1e-8)
        via_eta = np.vdot(eval_eta(f, star(a)), eval_eta(f, b))
        assert coboundary(f, a, b) == pytest.approx(via_eta, abs=1e-8)


class TestConversions:
    def test_from_wh_recovers_rotation(self):
        """Test W = L ⊗ L* yields a single L equal to the rotation up to a phase."""
        spec = from_WH(TensorOperator.from_kraus([ROTATION]), np.zeros((2, 2)), O2)
        (l,) = spec.kraus
        phase = l[0, 1]
        assert abs(phase) == pytest.approx(1.0)
        assert max_dev(l / phase, ROTATION) < 1e-12

    def test_from_wh_rejects_unbalanced(self):
        """Test M(e_12 ⊗ e_21) = e_11 differs from M(e_21 ⊗ e_12) = e_22."""
        w = TensorOperator.rank_one(matrix_unit(2, 1, 2), matrix_unit(2, 2, 1))
        with pytest.raises(BalanceError):
            from_WH(w, np.zeros((2, 2)), U2)

    def test_from_wh_rejects_non_psd(self):
        e11 = matrix_unit(2, 1, 1)
        with pytest.raises(NotPositiveError):
            from_WH(TensorOperator.rank_one(-e11, e11), np.zeros((2, 2)), U2)

    def test_from_wh_rejects_drift(self):
        with pytest.raises(AntiHermitianError):
            from_WH(TensorOperator.zeros(2), matrix_unit(2, 1, 2), U2)

    def test_from_wh_checks_target_conditions(self):
        w = TensorOperator.rank_one(np.eye(2), np.eye(2))
        assert from_WH(w, np.zeros((2, 2)), U2).d == 1
        with pytest.raises(TargetConditionError) as excinfo:
            from_WH(w, np.zeros((2, 2)), O2)
        assert not excinfo.value.report.passed

    def test_to_wh_of_running_spec(self, running_spec):
        w, h = to_WH(running_spec)
        expected = np.einsum("ab,cd->abcd", ROTATION, ROTATION.conj().T)
        assert max_dev(w.w, expected) == 0
        assert w.w[0, 1, 1, 0] == 1
        assert w.w[0, 1, 0, 1] == -1
        assert max_dev(h, np.zeros((2, 2))) == 0

    def test_to_wh_of_pure_drift(self):
        h = np.diag([1j, -1j])
        w, hh = to_WH(GaussianSpec.create(U2, [], h))
        assert not np.any(w.w)
        assert np.array_equal(hh, h)

    @pytest.mark.parametrize("kind", list(TargetKind))
    def test_to_wh_is_invariant_under_unitary_mixing(self, kind, rng):
        target = GroupTarget(kind, 2)
        for _ in range(5):
            spec = random_target_spec(target, 2, rng)
            w1, h1 = to_WH(spec)
            w2, h2 = to_WH(unitary_mix(spec, rng))
            assert w1.allclose(w2, atol=1e-10)
            assert max_dev(h1, h2) < 1e-10

    def test_unitary_mixing_cooks_to_the_same_functional(self, rng):
        target = GroupTarget(TargetKind.U_PLUS, 2)
        for _ in range(5):
            spec = random_base_spec(target, 3, rng)
            f, f_mixed = cook(spec), cook(unitary_mix(spec, rng))
            for word in words_up_to(generators(2), 3)[::37]:
                x = Element.from_word(word)
                assert eval_phi(f, x) == pytest.approx(eval_phi(f_mixed, x), abs=1e-10)

    @pytest.mark.parametrize("kind", list(TargetKind))
    def test_round_trip_through_wh(self, kind, rng):
        """Test from_WH(to_WH(spec)) classifies the same functional."""
        target = GroupTarget(kind, 2)
        spec = random_target_spec(target, 3, rng)
        back = from_WH(*to_WH(spec), target)
        f, f_back = cook(spec), cook(back)
        assert max_dev(f.first_order, f_back.first_order) < 1e-9
        assert max_dev(f.pair, f_back.pair) < 1e-9

    def test_canonical_spec_drops_dependent_kraus(self):
        spec = GaussianSpec.create(O2, [ROTATION, ROTATION])
        canonical = canonical_spec(spec)
        assert canonical.d == 1
        assert max_dev(cook(spec).pair, cook(canonical).pair) < 1e-12


class TestGram:
    def test_running_spec_gram(self, running):
        """Test {u_11 - 1, u_12} gives [[0, 0], [0, 1]]."""
        g_matrix = gram(running, [centered(Letter.u(1, 1)), u(1, 2)])
        assert max_dev(g_matrix, [[0, 0], [0, 1]]) < 1e-12

    def test_empty_family(self, running):
        assert gram(running, []).shape == (0, 0)

    def test_rejects_uncentered_elements(self, running):
        with pytest.raises(NotCenteredError) as excinfo:
            gram(running, [u(1, 2), u(1, 1)])
        assert excinfo.value.index == 1
        assert excinfo.value.value == 1

    @pytest.mark.parametrize("kind", list(TargetKind))
    def test_gram_is_positive_semidefinite(self, kind, rng):
        target = GroupTarget(kind, 2)
        for _ in range(5):
            f = cook(random_target_spec(target, 3, rng))
            g_matrix = gram(f, random_centered_family(target.dim, 6, rng))
            assert max_dev(g_matrix, g_matrix.conj().T) < 1e-8
            assert np.linalg.eigvalsh((g_matrix + g_matrix.conj().T) / 2)[0] >= -1e-8


class TestDrift:
    def test_drift_space_size(self):
        assert len(drift_space(3)) == 9
        assert all(counit(v) == 0 for v in drift_space(3))

    def test_running_spec_is_driftless(self, running_spec):
        assert is_driftless(running_spec)

    def test_diagonal_drift_is_not_driftless(self):
        """Test φ(u_11) - φ(u_11*) = 2i for H = diag(i, -i)."""
        spec = GaussianSpec.create(U2, [], np.diag([1j, -1j]))
        assert not is_driftless(spec)
        assert eval_phi(cook(spec), drift_space(2)[0]) == pytest.approx(2j)

    def test_zero_functional_is_driftless(self):
        assert is_driftless(GaussianSpec.create(U2, []))


class TestFreeGroup:
    def test_single_generator(self):
        """Test φ(g) = i - 1/2 and φ(g²) = 2i - 2 for v = (1), α = i."""
        f = cook(from_free_group_data(1, [[1]], [1j]))
        assert eval_phi(f, g(1)) == pytest.approx(1j - 0.5)
        assert eval_phi(f, g(1) * g(1)) == pytest.approx(2j - 2)
        assert eval_phi(f, g(1) * g(1, inverse=True)) == pytest.approx(0)

    def test_zero_data_is_zero_functional(self):
        f = cook(from_free_group_data(2, [[0], [0]], [0, 0]))
        for word in words_up_to(group_generators(2), 3):
            assert eval_phi(f, Element.from_word(word)) == 0

    def test_rejects_real_drift(self):
        with pytest.raises(InvalidParameterError, match="purely imaginary"):
            from_free_group_data(1, [[1]], [0.5])

    def test_rejects_size_mismatch(self):
        with pytest.raises(InvalidParameterError):
            from_free_group_data(2, [[1]], [0, 0])

    def test_spec_is_valid_for_free_group(self):
        spec = from_free_group_data(2, [[1, 2j], [0, 1]], [1j, -2j])
        assert spec.target.is_free_group
        assert spec.d == 2
        assert validate(spec).passed

    def test_agrees_with_diagonal_embedding(self, rng):
        """Test φ(x) = φ'(ι(x)) for the U_N⁺ spec with the same diagonal data."""
        v = [rng.standard_normal(2) + 1j * rng.standard_normal(2) for _ in range(2)]
        alpha = [1j * rng.standard_normal() for _ in range(2)]
        spec = from_free_group_data(2, v, alpha)
        f = cook(spec)
        f_unitary = cook(GaussianSpec.create(U2, spec.kraus, spec.h))
        for word in words_up_to(group_generators(2), 4):
            x = Element.from_word(word)
            assert eval_phi(f, x) == pytest.approx(eval_phi(f_unitary, group_embedding(x)), abs=1e-10)

    def test_group_embedding(self):
        assert group_embedding(g(1) * g(2, inverse=True)) == u(1, 1) * u(2, 2, starred=True)


class TestGaussianPair:
    @pytest.mark.parametrize("kind", [TargetKind.U_PLUS, TargetKind.O_PLUS, TargetKind.SP_PLUS])
    def test_coboundary_of_starred_words_is_inner_product(self, kind, rng):
        """Test ∂φ(a* ⊗ b) = ⟨η(a), η(b)⟩ on sampled word pairs of length ≤ 3."""
        target = GroupTarget(kind, 1)
        words = words_up_to(generators(target.dim), 3)
        for _ in range(7):
            f = cook(random_target_spec(target, 2, rng))
            for _ in range(20):
                a = Element.from_word(words[int(rng.integers(0, len(words)))])
                b = Element.from_word(words[int(rng.integers(0, len(words)))])
                inner = np.vdot(eval_eta(f, a), eval_eta(f, b))
                assert coboundary(f, star(a), b) == pytest.approx(inner, abs=1e-9)

    @given(seeds)
    @settings(max_examples=30, deadline=None)
    def test_eta_changes_sign_under_antipode(self, seed):
        """Test η∘S = -η on words of length ≤ 3."""
        rng = np.random.default_rng(seed)
        f = cook(random_base_spec(U2, 2, rng))
        x = _random_element(rng, generators(2), terms=3, max_length=3)
        assert max_dev(eval_eta(f, antipode_element(x)), -eval_eta(f, x)) < 1e-10

    def test_eta_changes_sign_under_antipode_on_the_free_group(self):
        f = cook(from_free_group_data(2, [[1, 1j], [2, 0]], [1j, 0]))
        for word in words_up_to(group_generators(2), 3):
            x = Element.from_word(word)
            assert max_dev(eval_eta(f, antipode_element(x)), -eval_eta(f, x)) < 1e-12
