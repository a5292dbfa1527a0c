"""Dense complex linear algebra for few-qubit systems.

Conventions used by the whole package:

* matrices are row-major ``numpy`` arrays of ``complex128``;
* a pure state of L qubits is a length ``2**L`` amplitude vector;
* basis index ``n`` encodes qubit ``k`` as bit ``k`` of ``n`` (qubit 0 is the
  least significant bit), so a bit string reads ``|n_{L-1} ... n_1 n_0>``.

All operations are pure functions that never mutate their inputs, so shared
arrays are safe to use from concurrent workers.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple

import numpy as np

from .errors import EigensolverError, NonHermitianError, SizeLimitError

MAX_QUBITS = 14
MAX_DIM = 2**MAX_QUBITS  # a dense complex128 matrix at this size is ~4 GiB

# Vector-level identities accumulate O(dim) rounding, matrix factorizations
# O(dim^3); hence the two tolerance tiers.
STATE_ATOL = 1e-12
MATRIX_ATOL = 1e-10


class SpectralDecomposition(NamedTuple):
    """Eigendecomposition H = V diag(eigenvalues) V† of a Hermitian matrix.

    ``eigenvalues`` are real and sorted ascending; the columns of
    ``eigenvectors`` form the orthonormal eigenbasis.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def num_qubits_of(dim: int) -> int:
    """Qubit count L with 2**L == dim; rejects non-powers of two."""
    n = int(dim)
    L = n.bit_length() - 1
    if n <= 0 or (1 << L) != n:
        raise ValueError(f"dimension {dim} is not a power of two")
    return L


def check_state(psi: np.ndarray) -> int:
    """Validate a pure-state amplitude vector and return its qubit count."""
    psi = np.asarray(psi)
    if psi.ndim != 1:
        raise ValueError(f"state must be a vector, got shape {psi.shape}")
    L = num_qubits_of(psi.size)
    if not np.all(np.isfinite(psi)):
        raise ValueError("state contains non-finite amplitudes")
    norm2 = float(np.real(np.vdot(psi, psi)))
    if abs(norm2 - 1.0) > STATE_ATOL:
        raise ValueError(f"state is not normalized: |psi|^2 = {norm2!r}")
    return L


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product with the package-wide dense size cap."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or b.ndim != 2:
        raise ValueError("kron expects two matrices")
    if a.shape[0] * b.shape[0] > MAX_DIM or a.shape[1] * b.shape[1] > MAX_DIM:
        raise SizeLimitError(
            f"kron result {a.shape[0] * b.shape[0]}x{a.shape[1] * b.shape[1]} "
            f"exceeds the dense cap of {MAX_DIM} ({MAX_QUBITS} qubits)"
        )
    return np.kron(a, b)


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest elementwise deviation of a square matrix from its adjoint."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def eigh(h: np.ndarray) -> SpectralDecomposition:
    """Hermitian eigendecomposition satisfying the SpectralDecomposition contract.

    The input must be Hermitian within 1e-10 (elementwise). Deterministic for
    a fixed input on a fixed platform.
    """
    h = np.asarray(h, dtype=np.complex128)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    defect = hermiticity_defect(h)
    if defect > MATRIX_ATOL:
        raise NonHermitianError(
            f"matrix is not Hermitian: max |H - H†| = {defect:.3e} > {MATRIX_ATOL}"
        )
    try:
        eigenvalues, eigenvectors = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - hard to trigger
        raise EigensolverError(f"eigendecomposition did not converge: {exc}") from exc
    return SpectralDecomposition(eigenvalues, eigenvectors)


@lru_cache(maxsize=256)
def _gather_table(num_qubits: int, keep: tuple[int, ...]) -> np.ndarray:
    """Basis-index table for the bit-mask partial trace.

    Entry [a, e] is the basis index whose kept qubits spell ``a`` and whose
    traced qubits spell ``e``: bit j of ``a`` is scattered to position
    ``keep[j]`` and bit j of ``e`` to the j-th traced position.
    """
    traced = tuple(q for q in range(num_qubits) if q not in keep)
    rows = np.zeros(1 << len(keep), dtype=np.intp)
    for j, q in enumerate(keep):
        rows |= ((np.arange(rows.size, dtype=np.intp) >> j) & 1) << q
    cols = np.zeros(1 << len(traced), dtype=np.intp)
    for j, q in enumerate(traced):
        cols |= ((np.arange(cols.size, dtype=np.intp) >> j) & 1) << q
    return rows[:, None] | cols[None, :]


def partial_trace(psi: np.ndarray, keep: Iterable[int]) -> np.ndarray:
    """Reduced density matrix of ``psi`` on the kept qubits.

    Qubits not in ``keep`` are traced out. The result is ordered by the kept
    qubits sorted ascending (bit j of the reduced index is the j-th smallest
    kept qubit), so it does not depend on the iteration order of ``keep``.
    """
    psi = np.asarray(psi, dtype=np.complex128)
    L = num_qubits_of(psi.size)
    keep_t = tuple(sorted({int(q) for q in keep}))
    if not keep_t:
        raise ValueError("keep set must be nonempty")
    if keep_t[0] < 0 or keep_t[-1] >= L:
        raise ValueError(f"qubit index out of range for {L} qubits: {keep_t}")
    amps = psi[_gather_table(L, keep_t)]
    return amps @ amps.conj().T


def purity(rho: np.ndarray) -> float:
    """tr(rho^2) of a Hermitian density matrix, as sum_ij |rho_ij|^2.

    Values overshooting [0, 1] by at most 1e-12 are clamped; anything farther
    out is returned untouched so broken inputs stay visible.
    """
    rho = np.asarray(rho)
    p = float(np.sum(np.abs(rho) ** 2))
    if 1.0 < p <= 1.0 + STATE_ATOL:
        return 1.0
    return p
