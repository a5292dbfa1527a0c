"""Multipartite entanglement generation in coupled NN/NNN XXZ spin chains.

Exact diagonalization of the coupled nearest/next-nearest-neighbor XXZ
Hamiltonian, Meyer-Wallach entanglement trajectories over Haar-random
product-state ensembles, and the oscillation ratio gamma that separates the
integrable from the chaotic regime as the coupling lambda grows.
"""

from ._version import __version__
from .ensemble import (
    EnsembleConfig,
    EntanglementTrajectory,
    GammaResult,
    entangling_power_trajectory,
    expected_entanglement,
    gamma_metric,
    sample_haar_product_state,
    sample_rng,
    time_grid,
)
from .entanglement import (
    EntanglementValue,
    linear_entropy,
    meyer_wallach,
    scott_measure,
)
from .errors import (
    DegenerateChainError,
    DegenerateTrajectoryError,
    EigensolverError,
    NonHermitianError,
    SizeLimitError,
    XXZChaosError,
)
from .evolution import Propagator, make_propagator
from .hamiltonian import ChainParams, Variant, build_boson, build_spin, total_magnetization
from .linalg import SpectralDecomposition, eigh, kron, partial_trace, purity
from .states import basis_state, ghz_state, product_state, w_state

__all__ = [
    "__version__",
    "ChainParams",
    "DegenerateChainError",
    "DegenerateTrajectoryError",
    "EigensolverError",
    "EnsembleConfig",
    "EntanglementTrajectory",
    "EntanglementValue",
    "GammaResult",
    "NonHermitianError",
    "Propagator",
    "SizeLimitError",
    "SpectralDecomposition",
    "Variant",
    "XXZChaosError",
    "basis_state",
    "build_boson",
    "build_spin",
    "eigh",
    "entangling_power_trajectory",
    "expected_entanglement",
    "gamma_metric",
    "ghz_state",
    "kron",
    "linear_entropy",
    "make_propagator",
    "meyer_wallach",
    "partial_trace",
    "product_state",
    "purity",
    "sample_haar_product_state",
    "sample_rng",
    "scott_measure",
    "time_grid",
    "total_magnetization",
    "w_state",
]
