from __future__ import annotations

import math

import numpy as np
import pytest

from conftest import random_density_matrix, random_unitary
from eulb.linalg import (
    IDENTITY_2,
    PAULI_X,
    binary_entropy,
    eigenvalues_hermitian,
    partial_trace,
    tensor_product,
    validate_density_matrix,
    von_neumann_entropy,
)


class TestTensorProduct:
    def test_identity_halves(self):
        out = tensor_product(IDENTITY_2 / 2, IDENTITY_2 / 2)
        assert np.array_equal(out, np.eye(4) / 4)

    def test_basis_bookkeeping(self):
        p0 = np.diag([1.0, 0.0])
        p1 = np.diag([0.0, 1.0])
        assert np.array_equal(tensor_product(p0, p1), np.diag([0.0, 1.0, 0.0, 0.0]))

    def test_mixed_times_sigma_x(self):
        out = tensor_product(IDENTITY_2 / 2, PAULI_X / 2)
        expected = np.zeros((4, 4), dtype=complex)
        expected[0, 1] = expected[1, 0] = expected[2, 3] = expected[3, 2] = 0.25
        assert np.max(np.abs(out - expected)) == 0.0

    def test_matches_kron(self, rng):
        for _ in range(20):
            a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            assert np.array_equal(tensor_product(a, b), np.kron(a, b))

    def test_dimension_error(self):
        with pytest.raises(ValueError, match="2x2"):
            tensor_product(np.eye(4), np.eye(2))


class TestPartialTrace:
    def test_max_entangled_marginal(self):
        phi = np.zeros((4, 4), dtype=complex)
        phi[0, 0] = phi[0, 3] = phi[3, 0] = phi[3, 3] = 0.5
        assert np.max(np.abs(partial_trace(phi, "B") - IDENTITY_2 / 2)) < 1e-15
        assert np.max(np.abs(partial_trace(phi, "A") - IDENTITY_2 / 2)) < 1e-15

    def test_evolved_state_memory_marginal(self):
        c = 0.6
        rho = np.zeros((4, 4), dtype=complex)
        rho[0, 0] = 0.18
        rho[1, 1] = 0.32
        rho[3, 3] = 0.5
        rho[0, 3] = rho[3, 0] = 0.3
        out = partial_trace(rho, "B")
        assert np.max(np.abs(out - np.diag([c * c / 2, 1 - c * c / 2]))) < 1e-15

    def test_row_sums(self):
        rho = np.diag([1 / 8, 3 / 8, 3 / 8, 1 / 8]).astype(complex)
        assert np.max(np.abs(partial_trace(rho, "A") - np.diag([0.5, 0.5]))) < 1e-15

    def test_undoes_tensor_product(self, rng):
        for _ in range(50):
            a = random_density_matrix(rng, 2)
            b = random_density_matrix(rng, 2)
            prod = tensor_product(a, b)
            assert np.max(np.abs(partial_trace(prod, "A") - a)) < 1e-12
            assert np.max(np.abs(partial_trace(prod, "B") - b)) < 1e-12

    def test_bad_inputs(self):
        with pytest.raises(ValueError, match="4x4"):
            partial_trace(np.eye(2), "A")
        with pytest.raises(ValueError, match="keep"):
            partial_trace(np.eye(4) / 4, "C")


class TestEigenvalues:
    def test_diagonal_input(self):
        evals = eigenvalues_hermitian(np.diag([0.5, 0.25, 0.25, 0.0]))
        assert np.array_equal(evals, [0.5, 0.25, 0.25, 0.0])

    def test_rank_deficient_block(self):
        # outer 2x2 block of the evolved maximally entangled state at c = 1
        m = np.array([[0.5, 0.5], [0.5, 0.5]])
        evals = eigenvalues_hermitian(m)
        assert np.max(np.abs(evals - [1.0, 0.0])) < 1e-15

    def test_pauli_spectrum(self):
        assert np.array_equal(eigenvalues_hermitian(PAULI_X), [1.0, -1.0])

    def test_2x2_against_characteristic_polynomial(self, rng):
        for _ in range(200):
            g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            h = (g + g.conj().T) / 2
            mine = eigenvalues_hermitian(h)
            tr = h.trace().real
            det = np.linalg.det(h).real
            roots = np.sort(np.roots([1.0, -tr, det]).real)[::-1]
            assert np.max(np.abs(mine - roots)) < 1e-12

    def test_4x4_against_lapack(self, rng):
        for _ in range(200):
            rho = random_density_matrix(rng, 4)
            mine = eigenvalues_hermitian(rho)
            ref = np.sort(np.linalg.eigvalsh(rho))[::-1]
            assert np.max(np.abs(mine - ref)) < 1e-12

    def test_rejects_non_hermitian(self):
        m = np.array([[0.0, 1.0], [0.0, 0.0]])
        with pytest.raises(ValueError, match="Hermitian"):
            eigenvalues_hermitian(m)

    def test_rejects_other_dimensions(self):
        with pytest.raises(ValueError, match="2x2 or 4x4"):
            eigenvalues_hermitian(np.eye(3))


class TestEntropy:
    def test_maximally_mixed_qubit(self):
        assert von_neumann_entropy(IDENTITY_2 / 2) == 1.0

    def test_pure_state(self):
        ket = np.array([0.6, 0.8j])
        rho = np.outer(ket, ket.conj())
        assert abs(von_neumann_entropy(rho)) < 1e-12

    def test_dyadic_probabilities(self):
        assert von_neumann_entropy(np.diag([0.5, 0.25, 0.25, 0.0])) == 1.5

    def test_random_states_spectrum_and_range(self, rng):
        for _ in range(1000):
            rho = random_density_matrix(rng, 4)
            evals = eigenvalues_hermitian(rho)
            assert abs(evals.sum() - 1.0) < 1e-9
            s = von_neumann_entropy(rho)
            assert 0.0 <= s <= 2.0 + 1e-12

    def test_unitary_invariance(self, rng):
        for _ in range(100):
            rho = random_density_matrix(rng, 4)
            u = random_unitary(rng, 4)
            rotated = u @ rho @ u.conj().T
            assert abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)) < 1e-9

    def test_positivity_error(self):
        with pytest.raises(ValueError, match="positivity|eigenvalue"):
            von_neumann_entropy(np.diag([1.001, -0.001]))


class TestBinaryEntropy:
    def test_half(self):
        assert binary_entropy(0.5) == 1.0

    def test_endpoints(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0

    def test_quarter(self):
        expected = 2.0 - 0.75 * math.log2(3.0)  # independent algebraic form
        assert abs(binary_entropy(0.25) - expected) < 1e-15
        assert abs(binary_entropy(0.25) - 0.811278) < 1e-6

    def test_symmetry(self, rng):
        for x in rng.uniform(0, 1, size=50):
            assert abs(binary_entropy(x) - binary_entropy(1 - x)) < 1e-12

    def test_clamps_edges(self):
        assert binary_entropy(-1e-13) == 0.0
        assert binary_entropy(1 + 1e-13) == 0.0

    def test_domain_error(self):
        with pytest.raises(ValueError, match="outside"):
            binary_entropy(1.5)


class TestValidateDensityMatrix:
    def test_accepts_valid(self, rng):
        validate_density_matrix(random_density_matrix(rng, 4))

    def test_rejects_non_hermitian(self):
        m = np.eye(4, dtype=complex) / 4
        m[0, 1] = 0.1
        with pytest.raises(ValueError, match="Hermitian"):
            validate_density_matrix(m)

    def test_rejects_bad_trace(self):
        with pytest.raises(ValueError, match="trace"):
            validate_density_matrix(np.eye(4, dtype=complex))

    def test_rejects_negative_eigenvalue(self):
        with pytest.raises(ValueError, match="negative eigenvalue"):
            validate_density_matrix(np.diag([1.2, -0.2, 0.0, 0.0]).astype(complex))

    def test_rejects_nan(self):
        m = np.eye(4, dtype=complex) / 4
        m[2, 2] = np.nan
        with pytest.raises(ValueError, match="finite"):
            validate_density_matrix(m)
