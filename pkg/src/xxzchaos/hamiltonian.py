"""Coupled nearest/next-nearest-neighbor XXZ chain Hamiltonians.

The three dense Hermitian operators studied by this package are

    H_NN      = (J/2) sum_{j=0}^{L-2}  Sx_j Sx_{j+1} + Sy_j Sy_{j+1} + mu Sz_j Sz_{j+1}
    H_NNN     = (J/2) sum_{j=0}^{L-3}  Sx_j Sx_{j+2} + Sy_j Sy_{j+2} + mu Sz_j Sz_{j+2}
    H_coupled = H_NN + lambda * H_NNN

with S the bare Pauli matrices (eigenvalues +-1), open boundary conditions
(no wrap-around bonds), and site j living on bit j of the basis index.

``build_boson`` constructs the same operators in the hard-boson picture,
where each bond contributes hopping J (b†_j b_{j+d} + h.c., i.e. a swap of a
01/10 occupation pair) plus the occupation-diagonal term
J (mu/2)(2 n_j - 1)(2 n_{j+d} - 1). The two builds agree elementwise to
machine precision, which the test suite uses as a cross-representation check.

All built operators conserve total magnetization M = sum_j Sz_j.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateChainError, SizeLimitError
from .linalg import MAX_QUBITS, kron

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
IDENTITY_2 = np.eye(2, dtype=np.complex128)

WARN_SITES = 10  # dense matrices beyond this get expensive fast


class Variant(Enum):
    """Which interaction range the Hamiltonian couples."""

    NN = "nn"
    NNN = "nnn"
    COUPLED = "coupled"


@dataclass(frozen=True)
class ChainParams:
    """Physical specification of the chain.

    ``exchange`` is the overall energy scale J (default 1; times are then in
    units of 1/J), ``mu`` the Sz-Sz anisotropy, ``lam`` the weight of the NNN
    term in the coupled Hamiltonian.
    """

    num_sites: int
    mu: float
    lam: float = 0.0
    exchange: float = 1.0

    def __post_init__(self):
        if self.num_sites < 2:
            raise ValueError(f"chain needs at least 2 sites, got {self.num_sites}")
        if self.num_sites > MAX_QUBITS:
            raise SizeLimitError(
                f"num_sites = {self.num_sites} exceeds the dense cap of {MAX_QUBITS}"
            )
        if self.num_sites > WARN_SITES:
            warnings.warn(
                f"num_sites = {self.num_sites}: dense {2**self.num_sites}-dim "
                "matrices are slow and memory-hungry",
                stacklevel=2,
            )
        for name in ("mu", "lam", "exchange"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.lam < 0:
            raise ValueError(f"lam must be >= 0, got {self.lam}")


def _bonds(num_sites: int, distance: int) -> list[tuple[int, int]]:
    """Open-boundary bond list (j, j+distance); no wrap-around terms."""
    if num_sites - distance < 1:
        raise DegenerateChainError(
            f"no bond of distance {distance} exists on a {num_sites}-site chain"
        )
    return [(j, j + distance) for j in range(num_sites - distance)]


def _two_site(op: np.ndarray, site_a: int, site_b: int, num_sites: int) -> np.ndarray:
    """`op` acting on both sites, identity elsewhere (site = bit index)."""
    ops = [IDENTITY_2] * num_sites
    ops[site_a] = op
    ops[site_b] = op
    full = ops[num_sites - 1]
    for k in range(num_sites - 2, -1, -1):
        full = kron(full, ops[k])
    return full


def _spin_range(params: ChainParams, distance: int) -> np.ndarray:
    h = np.zeros((2**params.num_sites,) * 2, dtype=np.complex128)
    for a, b in _bonds(params.num_sites, distance):
        h += _two_site(SIGMA_X, a, b, params.num_sites)
        h += _two_site(SIGMA_Y, a, b, params.num_sites)
        h += params.mu * _two_site(SIGMA_Z, a, b, params.num_sites)
    return 0.5 * params.exchange * h


def _boson_range(params: ChainParams, distance: int) -> np.ndarray:
    dim = 2**params.num_sites
    h = np.zeros((dim, dim), dtype=np.complex128)
    j = params.exchange
    for a, b in _bonds(params.num_sites, distance):
        for n in range(dim):
            na = (n >> a) & 1
            nb = (n >> b) & 1
            h[n, n] += j * 0.5 * params.mu * (2 * na - 1) * (2 * nb - 1)
            if na != nb:
                # hopping moves the hard boson across the bond
                h[n ^ ((1 << a) | (1 << b)), n] += j
    return h


def build_spin(params: ChainParams, variant: Variant) -> np.ndarray:
    """Dense Hamiltonian in the Pauli (spin) representation."""
    if variant is Variant.NN:
        return _spin_range(params, 1)
    if variant is Variant.NNN:
        return _spin_range(params, 2)
    return _spin_range(params, 1) + params.lam * _spin_range(params, 2)


def build_boson(params: ChainParams, variant: Variant) -> np.ndarray:
    """Dense Hamiltonian in the hard-boson representation."""
    if variant is Variant.NN:
        return _boson_range(params, 1)
    if variant is Variant.NNN:
        return _boson_range(params, 2)
    return _boson_range(params, 1) + params.lam * _boson_range(params, 2)


def total_magnetization(num_sites: int) -> np.ndarray:
    """Diagonal operator M = sum_j Sz_j; basis state n has eigenvalue 2*popcount(n) - L.

    Bit value 1 counts as occupation 1 (Sz = +1), so M is the conserved
    charge of every Hamiltonian built here.
    """
    if num_sites < 1:
        raise ValueError("need at least one site")
    n = np.arange(1 << num_sites, dtype=np.uint64)
    return np.diag((2.0 * np.bitwise_count(n) - num_sites).astype(np.complex128))
