import numpy as np
import pytest

from oracles import partial_trace_loops, random_full_state
from xxzchaos.errors import NonHermitianError, SizeLimitError
from xxzchaos.hamiltonian import (
    SIGMA_X,
    SIGMA_Z,
    ChainParams,
    Variant,
    build_spin,
)
from xxzchaos.linalg import (
    check_state,
    eigh,
    kron,
    num_qubits_of,
    partial_trace,
    purity,
)
from xxzchaos.states import basis_state, ghz_state


class TestKron:
    def test_identity_case(self):
        assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_diagonal_product(self):
        assert np.array_equal(kron(SIGMA_Z, SIGMA_Z), np.diag([1, -1, -1, 1]))

    def test_off_diagonal_blocks(self):
        got = kron(SIGMA_X, SIGMA_Z)
        want = np.zeros((4, 4), dtype=complex)
        want[0:2, 2:4] = SIGMA_Z
        want[2:4, 0:2] = SIGMA_Z
        assert np.array_equal(got, want)

    def test_elementwise_definition(self, rng):
        a = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))
        b = rng.standard_normal((2, 4)) + 1j * rng.standard_normal((2, 4))
        got = kron(a, b)
        for i in range(3):
            for j in range(2):
                for k in range(2):
                    for l in range(4):
                        assert got[i * 2 + k, j * 4 + l] == a[i, j] * b[k, l]

    def test_size_limit(self):
        big = np.eye(2**8)
        with pytest.raises(SizeLimitError):
            kron(big, big)


class TestEigh:
    def test_sigma_z(self):
        dec = eigh(SIGMA_Z)
        assert np.allclose(dec.eigenvalues, [-1.0, 1.0])
        # eigenvectors are the swapped computational basis, up to phase
        assert np.allclose(np.abs(dec.eigenvectors), [[0, 1], [1, 0]])

    def test_sigma_x_analytic(self):
        dec = eigh(SIGMA_X)
        assert np.allclose(dec.eigenvalues, [-1.0, 1.0])
        want = np.array([[1, 1], [-1, 1]]) / np.sqrt(2)
        for col in range(2):
            v = dec.eigenvectors[:, col]
            v = v * np.exp(-1j * np.angle(v[0]))
            assert np.allclose(v, want[:, col], atol=1e-12)

    def test_trace_invariance_on_chain(self):
        h = build_spin(ChainParams(num_sites=4, mu=1.5, lam=1.0), Variant.COUPLED)
        dec = eigh(h)
        assert abs(dec.eigenvalues.sum() - np.trace(h).real) < 1e-10

    def test_eigenvalues_sorted(self, rng):
        m = rng.standard_normal((32, 32)) + 1j * rng.standard_normal((32, 32))
        dec = eigh(m + m.conj().T)
        assert np.all(np.diff(dec.eigenvalues) >= 0)

    def test_reconstruction_dim_256(self, rng):
        m = rng.standard_normal((256, 256)) + 1j * rng.standard_normal((256, 256))
        h = m + m.conj().T
        dec = eigh(h)
        rebuilt = (dec.eigenvectors * dec.eigenvalues) @ dec.eigenvectors.conj().T
        rel = np.linalg.norm(rebuilt - h) / np.linalg.norm(h)
        assert rel < 1e-10

    def test_unitary_eigenbasis(self, rng):
        m = rng.standard_normal((64, 64)) + 1j * rng.standard_normal((64, 64))
        dec = eigh(m + m.conj().T)
        v = dec.eigenvectors
        assert np.max(np.abs(v.conj().T @ v - np.eye(64))) < 1e-10

    def test_norm_preserved_by_eigenbasis(self, rng):
        m = rng.standard_normal((16, 16)) + 1j * rng.standard_normal((16, 16))
        dec = eigh(m + m.conj().T)
        psi = random_full_state(16, rng)
        assert abs(np.linalg.norm(dec.eigenvectors @ psi) - 1.0) < 1e-12

    def test_rejects_non_hermitian(self):
        with pytest.raises(NonHermitianError):
            eigh(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_deterministic(self, rng):
        m = rng.standard_normal((32, 32)) + 1j * rng.standard_normal((32, 32))
        h = m + m.conj().T
        a = eigh(h)
        b = eigh(h.copy())
        assert np.array_equal(a.eigenvalues, b.eigenvalues)
        assert np.array_equal(a.eigenvectors, b.eigenvectors)


class TestPartialTrace:
    def test_product_state(self):
        rho = partial_trace(basis_state(2, 0b00), {0})
        assert np.allclose(rho, [[1, 0], [0, 0]])

    def test_bell_marginal(self):
        rho = partial_trace(ghz_state(2), {0})
        assert np.allclose(rho, np.eye(2) / 2, atol=1e-15)

    def test_against_loop_oracle(self, rng):
        psi = random_full_state(16, rng)
        got = partial_trace(psi, {1, 3})
        want = partial_trace_loops(psi, {1, 3}, 4)
        assert np.max(np.abs(got - want)) < 1e-12

    @pytest.mark.parametrize("keep", [(0,), (2,), (0, 1), (1, 2), (0, 3), (0, 1, 2)])
    def test_oracle_various_subsets(self, keep, rng):
        psi = random_full_state(16, rng)
        got = partial_trace(psi, keep)
        want = partial_trace_loops(psi, keep, 4)
        assert np.max(np.abs(got - want)) < 1e-12

    def test_elimination_order_irrelevant(self, rng):
        psi = random_full_state(32, rng)
        assert np.array_equal(partial_trace(psi, (3, 1)), partial_trace(psi, (1, 3)))

    def test_trace_one(self, rng):
        psi = random_full_state(32, rng)
        for keep in ((0,), (1, 4), (0, 2, 3)):
            assert abs(np.trace(partial_trace(psi, keep)) - 1.0) < 1e-12

    def test_hermitian_result(self, rng):
        psi = random_full_state(16, rng)
        rho = partial_trace(psi, (0, 2))
        assert np.max(np.abs(rho - rho.conj().T)) < 1e-12

    def test_empty_keep_rejected(self):
        with pytest.raises(ValueError):
            partial_trace(ghz_state(2), set())

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            partial_trace(ghz_state(2), {2})


class TestPurity:
    def test_pure_state(self):
        assert purity(np.array([[1, 0], [0, 0]], dtype=complex)) == 1.0

    def test_maximally_mixed(self):
        assert purity(np.eye(2) / 2) == 0.5

    def test_direct_arithmetic(self):
        assert abs(purity(np.diag([2 / 3, 1 / 3])) - 5 / 9) < 1e-15

    def test_clamps_tiny_overshoot(self):
        rho = np.diag([1.0 + 4e-13, 0.0])
        assert purity(rho) == 1.0

    def test_complementarity(self, rng):
        psi = random_full_state(64, rng)
        for part_a in ((0,), (1, 3), (0, 2, 5)):
            part_b = tuple(q for q in range(6) if q not in part_a)
            pa = purity(partial_trace(psi, part_a))
            pb = purity(partial_trace(psi, part_b))
            assert abs(pa - pb) < 1e-10

    def test_lower_bound(self, rng):
        psi = random_full_state(64, rng)
        rho = partial_trace(psi, (0, 1))
        assert purity(rho) >= 0.25 - 1e-12


class TestStateValidation:
    def test_check_state_returns_qubits(self):
        assert check_state(ghz_state(3)) == 3

    def test_rejects_bad_length(self):
        with pytest.raises(ValueError):
            check_state(np.ones(3) / np.sqrt(3))

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            check_state(np.array([1.0, 1.0, 0.0, 0.0]))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            check_state(np.array([np.nan, 0.0]))

    def test_num_qubits_of(self):
        assert num_qubits_of(256) == 8
        with pytest.raises(ValueError):
            num_qubits_of(12)
