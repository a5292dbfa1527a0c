"""Haar-product initial-state ensembles and entangling-power trajectories.

Reproducibility contract
------------------------
A run is keyed by one 64-bit seed. Sample ``s`` draws from its own child
stream: PCG64 seeded with ``SeedSequence(entropy=seed, spawn_key=(s,))``.
Single-qubit amplitudes come from the Box-Muller transform applied to that
stream's uniforms (exact recipe in ``sample_haar_product_state``). Per-sample
rows are assembled in sample order before any reduction, so trajectories are
bit-identical for a fixed (seed, config, hamiltonian) regardless of worker
count or execution order.

Worker selection: the ``XXZCHAOS_WORKERS`` environment variable; unset means
one worker per available CPU, ``1`` forces serial.
"""

from __future__ import annotations

import concurrent.futures
import multiprocessing
import os
from dataclasses import dataclass

import numpy as np

from .entanglement import meyer_wallach
from .errors import DegenerateTrajectoryError
from .evolution import Propagator, make_propagator
from .linalg import SpectralDecomposition, num_qubits_of

WORKERS_ENV = "XXZCHAOS_WORKERS"


def time_grid(t_max: float = 100.0, dt: float = 1.0) -> np.ndarray:
    """Grid 0, dt, 2 dt, ..., t_max (t_max rounded to the nearest multiple)."""
    if dt <= 0 or t_max <= 0:
        raise ValueError("t_max and dt must be positive")
    return dt * np.arange(int(round(t_max / dt)) + 1)


@dataclass(frozen=True, eq=False)
class EnsembleConfig:
    """Monte-Carlo settings for one trajectory estimate."""

    num_samples: int
    seed: int
    times: np.ndarray
    tau: float
    use_extensive: bool = True

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        if times.ndim != 1 or times.size == 0:
            raise ValueError("times must be a nonempty 1-D grid")
        if times[0] < 0 or np.any(np.diff(times) < 0):
            raise ValueError("times must be ascending and start at t >= 0")
        object.__setattr__(self, "times", times)
        if self.num_samples < 1:
            raise ValueError("num_samples must be >= 1")
        if not times[0] <= self.tau < times[-1]:
            raise ValueError(
                f"tau = {self.tau} must lie in [{times[0]}, {times[-1]})"
            )


@dataclass(frozen=True, eq=False)
class EntanglementTrajectory:
    """Per-time ensemble mean and standard error, plus the raw sample rows."""

    times: np.ndarray
    mean: np.ndarray
    stderr: np.ndarray
    per_sample: np.ndarray | None = None


@dataclass(frozen=True)
class GammaResult:
    """Oscillation ratio of the stabilized window [tau, t_max]."""

    gamma: float
    window_max: float
    window_min: float
    window_time_average: float
    tau: float
    t_max: float


def sample_rng(seed: int, sample_index: int) -> np.random.Generator:
    """Child random stream for one ensemble sample (the stream-splitting rule)."""
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(sample_index,))
    return np.random.Generator(np.random.PCG64(ss))


def sample_haar_product_state(num_qubits: int, rng: np.random.Generator) -> np.ndarray:
    """Tensor product of Haar-uniform single-qubit states (zero entanglement).

    Qubit k (bit k, drawn in order k = 0, 1, ...) consumes exactly four
    uniforms u1..u4 from ``rng`` and maps them through Box-Muller,

        z0 = sqrt(-2 ln(1-u1)) cos(2 pi u2),  z1 = sqrt(-2 ln(1-u1)) sin(2 pi u2)
        z2 = sqrt(-2 ln(1-u3)) cos(2 pi u4),  z3 = sqrt(-2 ln(1-u3)) sin(2 pi u4)

    giving the state (z0 + i z1, z2 + i z3) normalized: a standard complex
    Gaussian pair, whose direction is Haar-uniform. This recipe is part of
    the reproducibility contract; published CSVs depend on it.
    """
    if num_qubits < 1:
        raise ValueError("need at least one qubit")
    psi = np.ones(1, dtype=np.complex128)
    for _ in range(num_qubits):
        u = rng.random(4)
        r1 = np.sqrt(-2.0 * np.log1p(-u[0]))
        r2 = np.sqrt(-2.0 * np.log1p(-u[2]))
        qubit = np.array(
            [
                r1 * (np.cos(2 * np.pi * u[1]) + 1j * np.sin(2 * np.pi * u[1])),
                r2 * (np.cos(2 * np.pi * u[3]) + 1j * np.sin(2 * np.pi * u[3])),
            ]
        )
        qubit /= np.linalg.norm(qubit)
        psi = np.kron(qubit, psi)
    return psi


def _resolve_workers(workers: int | None, num_samples: int) -> int:
    if workers is None:
        raw = os.environ.get(WORKERS_ENV, "").strip()
        if raw:
            try:
                workers = int(raw)
            except ValueError:
                raise ValueError(f"{WORKERS_ENV} must be an integer, got {raw!r}")
        else:
            workers = os.cpu_count() or 1
    workers = int(workers)
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    return min(workers, num_samples)


def _sample_rows(args) -> np.ndarray:
    """Trajectory rows for a block of sample indices (one process's share)."""
    eigenvalues, eigenvectors, times, seed, indices, num_qubits, use_extensive = args
    prop = Propagator.from_decomposition(
        SpectralDecomposition(eigenvalues, eigenvectors)
    )
    rows = np.empty((len(indices), times.size))
    for r, s in enumerate(indices):
        psi0 = sample_haar_product_state(num_qubits, sample_rng(seed, int(s)))
        states = prop.evolve_grid(psi0, times)
        for c in range(times.size):
            value = meyer_wallach(states[c])
            rows[r, c] = value.extensive_q if use_extensive else value.normalized_q
    return rows


def entangling_power_trajectory(
    h: np.ndarray, cfg: EnsembleConfig, workers: int | None = None
) -> EntanglementTrajectory:
    """Monte-Carlo estimate of the entangling power of U(t) = exp(-i h t).

    Each sample draws a Haar product state, evolves it across the whole grid
    with the shared propagator, and records the Meyer-Wallach measure at
    every grid point. ``workers`` overrides the environment-based worker
    count; any value yields the same bits.
    """
    h = np.asarray(h, dtype=np.complex128)
    num_qubits = num_qubits_of(h.shape[0])
    prop = make_propagator(h)
    n_workers = _resolve_workers(workers, cfg.num_samples)
    indices = np.arange(cfg.num_samples)

    def block_args(block):
        return (
            prop.decomposition.eigenvalues,
            prop.decomposition.eigenvectors,
            cfg.times,
            cfg.seed,
            block,
            num_qubits,
            cfg.use_extensive,
        )

    if n_workers <= 1:
        per_sample = _sample_rows(block_args(indices))
    else:
        blocks = np.array_split(indices, n_workers)
        try:
            ctx = multiprocessing.get_context("fork")
        except ValueError:  # pragma: no cover - non-POSIX fallback
            ctx = multiprocessing.get_context()
        with concurrent.futures.ProcessPoolExecutor(
            max_workers=n_workers, mp_context=ctx
        ) as pool:
            parts = list(pool.map(_sample_rows, [block_args(b) for b in blocks]))
        per_sample = np.vstack(parts)

    mean = per_sample.mean(axis=0)
    if cfg.num_samples > 1:
        stderr = per_sample.std(axis=0, ddof=1) / np.sqrt(cfg.num_samples)
    else:
        stderr = np.zeros_like(mean)
    return EntanglementTrajectory(
        times=cfg.times, mean=mean, stderr=stderr, per_sample=per_sample
    )


def _window(traj: EntanglementTrajectory, tau: float) -> np.ndarray:
    times = np.asarray(traj.times, dtype=float)
    if not times[0] <= tau <= times[-1]:
        raise ValueError(f"tau = {tau} lies outside the grid [{times[0]}, {times[-1]}]")
    idx = np.nonzero(times >= tau - 1e-12)[0]
    if idx.size < 2:
        raise ValueError("averaging window is shorter than two grid points")
    return idx


def expected_entanglement(traj: EntanglementTrajectory, tau: float) -> float:
    """Trapezoidal time average of the ensemble mean over [tau, t_max]."""
    idx = _window(traj, tau)
    t = np.asarray(traj.times, dtype=float)[idx]
    y = np.asarray(traj.mean, dtype=float)[idx]
    return float(np.trapezoid(y, t) / (t[-1] - t[0]))


def gamma_metric(traj: EntanglementTrajectory, tau: float) -> GammaResult:
    """Range of the mean over [tau, t_max] divided by its time average.

    Large for integrable (oscillatory) dynamics, small for chaotic. The
    max/min are taken over grid points, so the value is reported together
    with tau and t_max; it is grid-sensitive by construction.
    """
    idx = _window(traj, tau)
    window = np.asarray(traj.mean, dtype=float)[idx]
    average = expected_entanglement(traj, tau)
    if average <= 0.0:
        raise DegenerateTrajectoryError(
            "window time average is zero; oscillation ratio undefined"
        )
    return GammaResult(
        gamma=float((window.max() - window.min()) / average),
        window_max=float(window.max()),
        window_min=float(window.min()),
        window_time_average=average,
        tau=float(tau),
        t_max=float(np.asarray(traj.times)[-1]),
    )
