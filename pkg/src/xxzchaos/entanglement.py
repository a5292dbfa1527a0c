"""Bipartite linear entropy and the Meyer-Wallach / Scott multipartite measures.

For a pure state psi and a subsystem A, the linear entropy is

    S_L = eta * (1 - tr rho_A^2),    eta = d/(d - 1),  d = min(dim_A, dim_B)

normalized so S_L runs from 0 (product across the cut) to 1 (maximally
entangled). The Meyer-Wallach measure averages the single-site case over all
sites,

    Q = 2 * (1 - (1/L) sum_k tr rho_k^2),

and the Scott measure generalizes it to size-m clusters,

    Q^m = 2^m/(2^m - 1) * (1 - avg_{|S|=m} tr rho_S^2),

with Q^1 == Q. Q in [0, 1]; the extensive variant L*Q in [0, L] is what the
trajectory reports chart.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from .linalg import STATE_ATOL, check_state, partial_trace, purity


@dataclass(frozen=True)
class EntanglementValue:
    """Meyer-Wallach measure in both normalizations (extensive = L * normalized)."""

    normalized_q: float
    extensive_q: float


def linear_entropy(psi: np.ndarray, subsystem: Iterable[int]) -> float:
    """Normalized linear entropy of ``subsystem`` against the rest of the chain."""
    num_qubits = check_state(psi)
    sub = sorted({int(q) for q in subsystem})
    if not sub or len(sub) >= num_qubits:
        raise ValueError("subsystem must be a nonempty proper subset of the sites")
    d = min(2 ** len(sub), 2 ** (num_qubits - len(sub)))
    eta = d / (d - 1)
    return eta * (1.0 - purity(partial_trace(psi, sub)))


def meyer_wallach(psi: np.ndarray) -> EntanglementValue:
    """Average entanglement of each site with the remaining system."""
    num_qubits = check_state(psi)
    if num_qubits < 2:
        raise ValueError("Meyer-Wallach measure needs at least 2 qubits")
    site_purities = [purity(partial_trace(psi, (k,))) for k in range(num_qubits)]
    q = 2.0 * (1.0 - sum(site_purities) / num_qubits)
    if -STATE_ATOL < q < 0.0:  # rounding on product states
        q = 0.0
    return EntanglementValue(normalized_q=q, extensive_q=num_qubits * q)


def scott_measure(psi: np.ndarray, cluster_size: int) -> float:
    """Size-``cluster_size`` cluster average; reduces to Meyer-Wallach at 1."""
    num_qubits = check_state(psi)
    m = int(cluster_size)
    if not 1 <= m <= num_qubits // 2:
        raise ValueError(
            f"cluster size must lie in [1, {num_qubits // 2}] for {num_qubits} qubits"
        )
    purities = [
        purity(partial_trace(psi, cluster))
        for cluster in combinations(range(num_qubits), m)
    ]
    q = (2**m / (2**m - 1)) * (1.0 - float(np.mean(purities)))
    if -STATE_ATOL < q < 0.0:
        q = 0.0
    return q
