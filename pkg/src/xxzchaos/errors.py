"""Exception types shared across the package.

Every error carries a short ``category`` slug used by the CLI for its
one-line categorized error output.
"""


class XXZChaosError(Exception):
    """Base class for all package-specific errors."""

    category = "error"


class SizeLimitError(XXZChaosError, ValueError):
    """Requested operator or chain exceeds the dense-matrix size cap."""

    category = "size-limit"


class NonHermitianError(XXZChaosError, ValueError):
    """Matrix violates the Hermiticity precondition."""

    category = "precondition-violation"


class EigensolverError(XXZChaosError, RuntimeError):
    """Eigendecomposition failed to converge."""

    category = "numerical-failure"


class DegenerateChainError(XXZChaosError, ValueError):
    """Chain too short for the requested interaction range."""

    category = "degenerate-chain"


class DegenerateTrajectoryError(XXZChaosError, ValueError):
    """Trajectory window has zero time average; the oscillation ratio is undefined."""

    category = "degenerate-trajectory"
