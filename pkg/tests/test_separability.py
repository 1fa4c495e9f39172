import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasicap.errors import DimensionError, NoCrossingError, ParameterError
from quasicap.joint import AuxiliaryInput, aux_input_state, local_family, remote_family
from quasicap.linalg import hermitian_eigenvalues, ket, projector, random_density, random_pure_state
from quasicap.separability import (
    determinant_criterion,
    entanglement_threshold,
    local_output_eigenvalues_formula,
    min_pt_eigenvalue,
    ppt_verdict,
    printed_local_matrix,
    werner_state,
)

BELL = (ket((0, 0)) + ket((1, 1))) / math.sqrt(2)


def _random_separable(rng, terms=4):
    w = rng.random(terms)
    w /= w.sum()
    return sum(
        p * np.kron(projector(random_pure_state(2, rng)), projector(random_pure_state(2, rng))) for p in w
    )


class TestPpt:
    def test_bell(self):
        verdict = ppt_verdict(projector(BELL))
        assert verdict.entangled and verdict.conclusive
        assert verdict.min_pt_eigenvalue == pytest.approx(-0.5)
        assert verdict.eigenvalues == sorted(verdict.eigenvalues)

    def test_product(self, rng):
        rho = np.kron(random_density(2, rng), random_density(2, rng))
        verdict = ppt_verdict(rho)
        assert not verdict.entangled and verdict.min_pt_eigenvalue >= -1e-12

    def test_random_separable_mixtures(self, rng):
        for _ in range(500):
            assert not ppt_verdict(_random_separable(rng)).entangled

    def test_larger_system_is_witness_only(self, rng):
        verdict = ppt_verdict(random_density(9, rng), dims=(3, 3))
        assert not verdict.conclusive

    def test_cut_choice_irrelevant_for_spectrum(self, rng):
        rho = random_density(4, rng)
        assert min_pt_eigenvalue(rho, cut=0) == pytest.approx(min_pt_eigenvalue(rho, cut=1), abs=1e-12)

    def test_non_bipartite(self):
        with pytest.raises(DimensionError):
            ppt_verdict(np.eye(8) / 8, dims=(2, 2, 2))

    @pytest.mark.parametrize("omega", np.linspace(0.01, 0.5, 25))
    def test_aux_input_entangled(self, omega):
        assert ppt_verdict(aux_input_state(AuxiliaryInput(omega))).entangled

    def test_aux_input_product_endpoint(self):
        assert not ppt_verdict(aux_input_state(AuxiliaryInput(0.0))).entangled


class TestDeterminants:
    def test_maximally_mixed(self):
        rep = determinant_criterion(np.eye(4) / 4)
        assert min(rep.d1, rep.d2, rep.d3, rep.d4) > 0
        assert not rep.witness

    def test_aux_input_quarter(self):
        rep = determinant_criterion(aux_input_state(AuxiliaryInput(0.25)))
        assert rep.witness
        assert rep.d3 > 0 and rep.d4 >= 0

    def test_bell(self):
        rep = determinant_criterion(projector(BELL))
        assert rep.d2 == pytest.approx(0.5**3 * -0.5)

    def test_wrong_size(self):
        with pytest.raises(DimensionError):
            determinant_criterion(np.eye(2) / 2)

    def test_agrees_with_ppt(self, rng):
        states = [random_density(4, rng) for _ in range(250)]
        states += [_random_separable(rng, 2) * 0.5 + random_density(4, rng) * 0.5 for _ in range(250)]
        states += [aux_input_state(AuxiliaryInput(w)) for w in np.linspace(0, 0.5, 51)]
        checked = 0
        for rho in states:
            lo = min_pt_eigenvalue(rho)
            if abs(lo) <= 1e-9:
                continue
            checked += 1
            assert determinant_criterion(rho).witness == (lo < 0)
        assert checked > 400


class TestEigenFormula:
    def test_n2(self):
        vals = local_output_eigenvalues_formula(2)
        np.testing.assert_allclose(sorted(vals), sorted([1 / 6, 1 / 6, 1 / 3 + math.sqrt(5) / 6, 1 / 3 - math.sqrt(5) / 6]))
        assert min(vals) == pytest.approx(-0.039345, abs=1e-6)
        assert sum(v < 0 for v in vals) == 1

    def test_n3(self):
        assert min(local_output_eigenvalues_formula(3)) == pytest.approx(1 / 3 - math.sqrt(34) / 18, abs=1e-15)
        assert min(local_output_eigenvalues_formula(3)) == pytest.approx(0.0093916, abs=1e-7)

    def test_negative_only_for_two(self):
        assert [n for n in range(2, 9) if min(local_output_eigenvalues_formula(n)) < 0] == [2]

    @pytest.mark.parametrize("n", range(2, 12))
    def test_sum_is_one(self, n):
        assert sum(local_output_eigenvalues_formula(n)) == pytest.approx(1.0, abs=1e-12)

    def test_rejects_small_n(self):
        with pytest.raises(ParameterError):
            local_output_eigenvalues_formula(1)


class TestPrintedMatrix:
    @pytest.mark.parametrize("alpha2", [0.1, 0.3, 0.5])
    def test_annihilates_singlet(self, alpha2):
        mat = printed_local_matrix(2, math.sqrt(alpha2), math.sqrt(1 - alpha2))
        singlet = (ket((0, 1)) - ket((1, 0))) / math.sqrt(2)
        np.testing.assert_allclose(mat @ singlet, 0, atol=1e-15)
        assert np.trace(mat).real == pytest.approx(1.0)

    def test_spectrum_differs_from_formula(self):
        spectrum = hermitian_eigenvalues(printed_local_matrix(2, math.sqrt(0.3), math.sqrt(0.7)))
        formula = np.sort(local_output_eigenvalues_formula(2))
        assert np.max(np.abs(spectrum - formula)) > 0.1


class TestThreshold:
    def test_remote(self):
        assert entanglement_threshold(remote_family, 0.0, 0.4) == pytest.approx(0.5 - math.sqrt(39) / 16, abs=1e-6)

    def test_local(self):
        assert entanglement_threshold(local_family, 0.0, 0.4) == pytest.approx(0.5 - math.sqrt(48) / 16, abs=1e-6)

    def test_werner(self):
        assert entanglement_threshold(werner_state, 0.0, 1.0) == pytest.approx(1 / 3, abs=1e-6)

    def test_werner_reversed_bracket_direction(self):
        assert entanglement_threshold(lambda t: werner_state(1 - t), 0.0, 1.0) == pytest.approx(2 / 3, abs=1e-6)

    def test_no_crossing(self):
        with pytest.raises(NoCrossingError):
            entanglement_threshold(lambda _: np.eye(4) / 4, 0.0, 1.0)


@settings(max_examples=60, deadline=None)
@given(st.floats(0.0, 1.0))
def test_werner_verdict_property(v):
    lo = min_pt_eigenvalue(werner_state(v))
    assert lo == pytest.approx((1 - 3 * v) / 4, abs=1e-12)
    if abs(v - 1 / 3) > 1e-8:
        assert ppt_verdict(werner_state(v)).entangled == (v > 1 / 3)
