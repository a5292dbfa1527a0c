"""Unitary time evolution exp(-i H t) via spectral decomposition (hbar = 1).

The eigendecomposition is computed once per Hamiltonian and reused for every
time and every sample; evaluating the propagator afterwards is just a phase
twist in the eigenbasis, exact to rounding at any t. A Propagator is
immutable, so one instance can be shared by concurrent workers.
"""

from __future__ import annotations

import numpy as np

from .linalg import SpectralDecomposition, check_state, eigh


class Propagator:
    """Time-evolution engine for a fixed Hermitian generator."""

    def __init__(self, h: np.ndarray):
        self.decomposition = eigh(h)
        self.dim = self.decomposition.eigenvalues.size

    @classmethod
    def from_decomposition(cls, decomposition: SpectralDecomposition) -> "Propagator":
        """Rebuild a propagator from a previously computed decomposition."""
        prop = cls.__new__(cls)
        prop.decomposition = decomposition
        prop.dim = decomposition.eigenvalues.size
        return prop

    def matrix(self, t: float) -> np.ndarray:
        """Dense U(t) = V exp(-i diag(eigenvalues) t) V†."""
        evals, vecs = self.decomposition
        return (vecs * np.exp(-1j * evals * t)) @ vecs.conj().T

    def evolve(self, psi0: np.ndarray, t: float) -> np.ndarray:
        """U(t) applied to a normalized state."""
        self._check(psi0)
        evals, vecs = self.decomposition
        coeffs = vecs.conj().T @ psi0
        return vecs @ (np.exp(-1j * evals * t) * coeffs)

    def evolve_grid(self, psi0: np.ndarray, times: np.ndarray) -> np.ndarray:
        """States at every grid time; row i is U(times[i]) psi0.

        psi0 is transformed into the eigenbasis once; each grid point then
        costs one phase twist and one back-transform.
        """
        self._check(psi0)
        times = np.asarray(times, dtype=float)
        if times.size == 0:
            raise ValueError("time grid is empty")
        if times[0] < 0 or np.any(np.diff(times) < 0):
            raise ValueError("times must be ascending and start at t >= 0")
        evals, vecs = self.decomposition
        coeffs = vecs.conj().T @ psi0
        phases = np.exp(-1j * np.outer(times, evals))
        return (phases * coeffs) @ vecs.T

    def _check(self, psi0: np.ndarray) -> None:
        if check_state(psi0) != self.dim.bit_length() - 1:
            raise ValueError(
                f"state dimension {np.asarray(psi0).size} does not match "
                f"propagator dimension {self.dim}"
            )


def make_propagator(h: np.ndarray) -> Propagator:
    """Diagonalize ``h`` once and return the reusable propagator."""
    return Propagator(h)
