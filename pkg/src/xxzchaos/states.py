"""Constructors for reference pure states (basis, product, GHZ, W)."""

from __future__ import annotations

from typing import Sequence

import numpy as np


def basis_state(num_qubits: int, index: int) -> np.ndarray:
    """Computational basis state |index> of ``num_qubits`` qubits."""
    dim = 1 << num_qubits
    if not 0 <= index < dim:
        raise ValueError(f"basis index {index} out of range for {num_qubits} qubits")
    psi = np.zeros(dim, dtype=np.complex128)
    psi[index] = 1.0
    return psi


def product_state(qubit_states: Sequence[np.ndarray]) -> np.ndarray:
    """Tensor product of single-qubit states; entry k goes on bit k."""
    if not qubit_states:
        raise ValueError("need at least one qubit state")
    psi = np.ones(1, dtype=np.complex128)
    for q in qubit_states:
        q = np.asarray(q, dtype=np.complex128)
        if q.shape != (2,):
            raise ValueError(f"single-qubit state must have shape (2,), got {q.shape}")
        psi = np.kron(q, psi)
    return psi


def ghz_state(num_qubits: int) -> np.ndarray:
    """(|00...0> + |11...1>)/sqrt(2)."""
    if num_qubits < 2:
        raise ValueError("GHZ state needs at least 2 qubits")
    psi = np.zeros(1 << num_qubits, dtype=np.complex128)
    psi[0] = psi[-1] = 1.0 / np.sqrt(2.0)
    return psi


def w_state(num_qubits: int) -> np.ndarray:
    """Equal superposition of all single-excitation basis states."""
    if num_qubits < 2:
        raise ValueError("W state needs at least 2 qubits")
    psi = np.zeros(1 << num_qubits, dtype=np.complex128)
    for k in range(num_qubits):
        psi[1 << k] = 1.0 / np.sqrt(num_qubits)
    return psi
