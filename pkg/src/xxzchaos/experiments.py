"""Experiment drivers: canned figure runs, parameter sweeps, and the selftest.

Each runner computes its trajectories, writes the delimited output (CSV) and
the SVG figure from the same in-memory arrays, and finishes with a flat
key = value manifest naming every emitted file. Runs with the same seed and
config produce byte-identical CSVs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

import numpy as np

from ._version import __version__
from .ensemble import (
    EnsembleConfig,
    entangling_power_trajectory,
    expected_entanglement,
    gamma_metric,
    time_grid,
)
from .entanglement import linear_entropy, meyer_wallach, scott_measure
from .hamiltonian import ChainParams, Variant, build_boson, build_spin
from .reporting import (
    write_expected_csv,
    write_gamma_csv,
    write_key_value,
    write_trajectory_csv,
)
from .states import basis_state, ghz_state, w_state

SWEEP_AXES = ("lambda", "mu", "L", "samples", "dt")

VariantSpec = tuple[str, Variant, float]


@dataclass(frozen=True, eq=False)
class RunConfig:
    """Everything one experiment run needs: chain, variants, ensemble, outputs."""

    chain: ChainParams
    variantset: tuple[VariantSpec, ...]
    ensemble: EnsembleConfig
    output_dir: Path
    emit_svg: bool = True

    def __post_init__(self):
        object.__setattr__(self, "output_dir", Path(self.output_dir))
        object.__setattr__(self, "variantset", tuple(self.variantset))
        labels = [label for label, _, _ in self.variantset]
        if len(labels) != len(set(labels)):
            raise ValueError(f"variant labels must be unique, got {labels}")


@dataclass(frozen=True)
class RunManifest:
    """Written manifest: its path plus the parsed key/value entries."""

    path: Path
    entries: dict[str, str]

    def output_paths(self) -> list[Path]:
        return [
            self.path.parent / value
            for key, value in self.entries.items()
            if key.startswith("output.")
        ]


def fig1_variants(lam: float) -> tuple[VariantSpec, ...]:
    """NN and NNN components plus the coupled model at the given lambda."""
    return (
        ("NN", Variant.NN, 0.0),
        ("NNN", Variant.NNN, 0.0),
        ("coupled", Variant.COUPLED, float(lam)),
    )


def lambda_variants(lambdas: Sequence[float]) -> tuple[VariantSpec, ...]:
    """Coupled-model variant per lambda value."""
    return tuple(
        (f"lambda{float(v):g}", Variant.COUPLED, float(v)) for v in lambdas
    )


def _variant_trajectories(cfg: RunConfig, workers: int | None):
    results = []
    for label, variant, lam in cfg.variantset:
        params = replace(cfg.chain, lam=float(lam))
        h = build_spin(params, variant)
        traj = entangling_power_trajectory(h, cfg.ensemble, workers)
        results.append((label, variant, lam, traj))
    return results


def _grid_dt(times: np.ndarray) -> float:
    return float(times[1] - times[0]) if times.size > 1 else 0.0


def _base_entries(cfg: RunConfig, command: str) -> dict[str, object]:
    times = cfg.ensemble.times
    return {
        "artifact_version": __version__,
        "command": command,
        "seed": cfg.ensemble.seed,
        "chain.num_sites": cfg.chain.num_sites,
        "chain.mu": cfg.chain.mu,
        "chain.lambda": cfg.chain.lam,
        "chain.exchange": cfg.chain.exchange,
        "ensemble.num_samples": cfg.ensemble.num_samples,
        "ensemble.tau": cfg.ensemble.tau,
        "ensemble.use_extensive": cfg.ensemble.use_extensive,
        "grid.t_max": times[-1],
        "grid.dt": _grid_dt(times),
        "grid.points": times.size,
        "emit_svg": cfg.emit_svg,
    }


def _finish_manifest(
    cfg: RunConfig,
    name: str,
    entries: dict[str, object],
    started: float,
) -> RunManifest:
    entries["duration_seconds"] = f"{time.monotonic() - started:.3f}"
    path = cfg.output_dir / name
    write_key_value(path, entries)
    return RunManifest(path=path, entries={k: str(v) for k, v in entries.items()})


def _ylabel(cfg: RunConfig) -> str:
    kind = "extensive" if cfg.ensemble.use_extensive else "normalized"
    return f"ensemble mean Q ({kind})"


def run_fig1(cfg: RunConfig, workers: int | None = None) -> RunManifest:
    """Trajectories for every configured variant plus their time-average levels."""
    started = time.monotonic()
    results = _variant_trajectories(cfg, workers)
    entries = _base_entries(cfg, "fig1")
    curves, levels = [], []
    for label, variant, lam, traj in results:
        entries[f"variant.{label}.kind"] = variant.value
        entries[f"variant.{label}.lambda"] = lam
        name = f"fig1_trajectory_{label}.csv"
        write_trajectory_csv(cfg.output_dir / name, traj)
        entries[f"output.trajectory.{label}"] = name
        levels.append((label, expected_entanglement(traj, cfg.ensemble.tau)))
        curves.append((label, traj.times, traj.mean))
    write_expected_csv(cfg.output_dir / "fig1_expected.csv", levels)
    entries["output.expected"] = "fig1_expected.csv"
    if cfg.emit_svg:
        from . import plotting

        plotting.plot_trajectories(
            cfg.output_dir / "fig1.svg", curves, levels, ylabel=_ylabel(cfg)
        )
        entries["output.figure"] = "fig1.svg"
    return _finish_manifest(cfg, "fig1_manifest.txt", entries, started)


def run_fig2(cfg: RunConfig, workers: int | None = None) -> RunManifest:
    """Coupled-model trajectories across lambdas, one stacked panel per value."""
    started = time.monotonic()
    results = _variant_trajectories(cfg, workers)
    entries = _base_entries(cfg, "fig2")
    curves = []
    for label, variant, lam, traj in results:
        entries[f"variant.{label}.kind"] = variant.value
        entries[f"variant.{label}.lambda"] = lam
        name = f"fig2_trajectory_{label}.csv"
        write_trajectory_csv(cfg.output_dir / name, traj)
        entries[f"output.trajectory.{label}"] = name
        curves.append((label, traj.times, traj.mean))
    if cfg.emit_svg:
        from . import plotting

        plotting.plot_trajectory_stack(
            cfg.output_dir / "fig2.svg", curves, ylabel=_ylabel(cfg)
        )
        entries["output.figure"] = "fig2.svg"
    return _finish_manifest(cfg, "fig2_manifest.txt", entries, started)


def run_fig3(
    cfg: RunConfig, lambdas: Sequence[float], workers: int | None = None
) -> RunManifest:
    """Oscillation ratio gamma per lambda over the stabilized window."""
    started = time.monotonic()
    lambdas = [float(v) for v in lambdas]
    if any(b <= a for a, b in zip(lambdas, lambdas[1:])):
        raise ValueError("lambdas must be strictly ascending")
    cfg = replace(cfg, variantset=lambda_variants(lambdas))
    results = _variant_trajectories(cfg, workers)
    entries = _base_entries(cfg, "fig3")
    gamma_rows = []
    for (label, _, lam, traj), value in zip(results, lambdas):
        name = f"fig3_trajectory_{label}.csv"
        write_trajectory_csv(cfg.output_dir / name, traj)
        entries[f"output.trajectory.{label}"] = name
        entries[f"variant.{label}.lambda"] = lam
        gamma_rows.append((value, gamma_metric(traj, cfg.ensemble.tau)))
    write_gamma_csv(cfg.output_dir / "fig3_gamma.csv", gamma_rows, axis_name="lambda")
    entries["output.gamma"] = "fig3_gamma.csv"
    if cfg.emit_svg:
        from . import plotting

        plotting.plot_gamma(
            cfg.output_dir / "fig3.svg",
            np.array(lambdas),
            np.array([g.gamma for _, g in gamma_rows]),
        )
        entries["output.figure"] = "fig3.svg"
    return _finish_manifest(cfg, "fig3_manifest.txt", entries, started)


def _sweep_point(cfg: RunConfig, axis: str, value: float):
    """Chain/ensemble for one sweep value; the swept variant is the coupled model."""
    chain, ens = cfg.chain, cfg.ensemble
    if axis == "lambda":
        chain = replace(chain, lam=float(value))
    elif axis == "mu":
        chain = replace(chain, mu=float(value))
    elif axis == "L":
        chain = replace(chain, num_sites=int(value))
    elif axis == "samples":
        ens = replace(ens, num_samples=int(value))
    elif axis == "dt":
        ens = replace(ens, times=time_grid(float(ens.times[-1]), float(value)))
    else:
        raise ValueError(f"unknown sweep axis {axis!r}; choose from {SWEEP_AXES}")
    return chain, ens


def run_sweep(
    cfg: RunConfig,
    axis: str,
    values: Sequence[float],
    workers: int | None = None,
) -> RunManifest:
    """One coupled-model trajectory and gamma per value of the swept axis."""
    started = time.monotonic()
    values = [float(v) for v in values]
    if not values:
        raise ValueError("sweep needs at least one value")
    entries = _base_entries(cfg, "sweep")
    entries["sweep.axis"] = axis
    entries["sweep.values"] = ",".join(f"{v:g}" for v in values)
    gamma_rows = []
    for value in values:
        chain, ens = _sweep_point(cfg, axis, value)
        label = f"{axis}{value:g}"
        h = build_spin(chain, Variant.COUPLED)
        traj = entangling_power_trajectory(h, ens, workers)
        name = f"sweep_trajectory_{label}.csv"
        write_trajectory_csv(cfg.output_dir / name, traj)
        entries[f"output.trajectory.{label}"] = name
        gamma_rows.append((value, gamma_metric(traj, ens.tau)))
    write_gamma_csv(cfg.output_dir / "sweep_gamma.csv", gamma_rows, axis_name=axis)
    entries["output.gamma"] = "sweep_gamma.csv"
    if cfg.emit_svg:
        from . import plotting

        plotting.plot_gamma(
            cfg.output_dir / "sweep.svg",
            np.array(values),
            np.array([g.gamma for _, g in gamma_rows]),
            xlabel=axis,
        )
        entries["output.figure"] = "sweep.svg"
    return _finish_manifest(cfg, "sweep_manifest.txt", entries, started)


def run_selftest(verbose: bool = True) -> list[tuple[str, bool]]:
    """Field diagnostic: analytic entanglement values + representation equivalence.

    Independent of the test harness; prints one PASS/FAIL line per check.
    """
    checks: list[tuple[str, bool]] = []

    def check(name: str, fn) -> None:
        try:
            ok = bool(fn())
        except Exception:
            ok = False
        checks.append((name, ok))
        if verbose:
            print(f"{'PASS' if ok else 'FAIL'}  {name}")

    check(
        "product state has Q = 0",
        lambda: meyer_wallach(basis_state(4, 0b0101)).normalized_q < 1e-10,
    )
    for num_qubits in range(2, 9):
        check(
            f"GHZ({num_qubits}) has Q = 1",
            lambda n=num_qubits: abs(meyer_wallach(ghz_state(n)).normalized_q - 1.0)
            < 1e-10,
        )
    check(
        "W(3) has Q = 8/9",
        lambda: abs(meyer_wallach(w_state(3)).normalized_q - 8.0 / 9.0) < 1e-10,
    )
    check(
        "GHZ(4) has Q^2 = 2/3",
        lambda: abs(scott_measure(ghz_state(4), 2) - 2.0 / 3.0) < 1e-10,
    )
    check(
        "Bell pair has linear entropy 1 across the cut",
        lambda: abs(linear_entropy(ghz_state(2), [0]) - 1.0) < 1e-10,
    )

    def equivalent(num_sites: int, mu: float, variant: Variant) -> bool:
        params = ChainParams(num_sites=num_sites, mu=mu, lam=0.0)
        return np.allclose(
            build_spin(params, variant), build_boson(params, variant), atol=1e-12
        )

    for num_sites in range(2, 6):
        for mu in (0.0, 1.0, 1.5):
            for variant in (Variant.NN, Variant.NNN):
                if variant is Variant.NNN and num_sites < 3:
                    continue
                check(
                    f"spin/boson builds agree (L={num_sites}, mu={mu}, {variant.value})",
                    lambda n=num_sites, m=mu, v=variant: equivalent(n, m, v),
                )
    return checks
