"""CSV, manifest, and config-file I/O.

Floats are written with 17 significant digits so a parsed CSV reproduces the
in-memory doubles bit-exactly. Every write goes to a temp file in the target
directory and is renamed into place on success.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .ensemble import EntanglementTrajectory, GammaResult

GAMMA_FIELDS = ("gamma", "window_max", "window_min", "window_avg", "tau", "t_max")


def format_float(x: float) -> str:
    return format(float(x), ".17g")


def atomic_write_text(path: str | os.PathLike, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise
    return path


def write_trajectory_csv(
    path: str | os.PathLike,
    traj: EntanglementTrajectory,
    include_samples: bool = True,
) -> Path:
    """Rows are `t,mean,stderr` plus one `s<i>` column per retained sample."""
    per_sample = traj.per_sample if include_samples else None
    header = "t,mean,stderr"
    if per_sample is not None:
        header += "," + ",".join(f"s{i}" for i in range(per_sample.shape[0]))
    lines = [header]
    for i, t in enumerate(traj.times):
        cells = [format_float(t), format_float(traj.mean[i]), format_float(traj.stderr[i])]
        if per_sample is not None:
            cells.extend(format_float(v) for v in per_sample[:, i])
        lines.append(",".join(cells))
    return atomic_write_text(path, "\n".join(lines) + "\n")


def read_trajectory_csv(path: str | os.PathLike) -> EntanglementTrajectory:
    with open(path) as handle:
        header = handle.readline().strip().split(",")
        data = np.loadtxt(handle, delimiter=",", ndmin=2)
    if header[:3] != ["t", "mean", "stderr"]:
        raise ValueError(f"unexpected trajectory header in {path}: {header[:3]}")
    per_sample = data[:, 3:].T if len(header) > 3 else None
    return EntanglementTrajectory(
        times=data[:, 0], mean=data[:, 1], stderr=data[:, 2], per_sample=per_sample
    )


def write_gamma_csv(
    path: str | os.PathLike,
    rows: Sequence[tuple[float, GammaResult]],
    axis_name: str = "lambda",
) -> Path:
    """One row per swept value: `<axis>,gamma,window_max,window_min,window_avg,tau,t_max`."""
    lines = [axis_name + "," + ",".join(GAMMA_FIELDS)]
    for value, g in rows:
        cells = (
            value,
            g.gamma,
            g.window_max,
            g.window_min,
            g.window_time_average,
            g.tau,
            g.t_max,
        )
        lines.append(",".join(format_float(c) for c in cells))
    return atomic_write_text(path, "\n".join(lines) + "\n")


def read_gamma_csv(path: str | os.PathLike) -> tuple[str, np.ndarray]:
    """Returns the axis column name and the numeric table (one row per value)."""
    with open(path) as handle:
        header = handle.readline().strip().split(",")
        data = np.loadtxt(handle, delimiter=",", ndmin=2)
    if tuple(header[1:]) != GAMMA_FIELDS:
        raise ValueError(f"unexpected gamma header in {path}: {header}")
    return header[0], data


def write_expected_csv(
    path: str | os.PathLike, rows: Sequence[tuple[str, float]]
) -> Path:
    lines = ["label,expected"]
    lines.extend(f"{label},{format_float(value)}" for label, value in rows)
    return atomic_write_text(path, "\n".join(lines) + "\n")


def read_expected_csv(path: str | os.PathLike) -> list[tuple[str, float]]:
    rows = []
    with open(path) as handle:
        header = handle.readline().strip()
        if header != "label,expected":
            raise ValueError(f"unexpected header in {path}: {header}")
        for line in handle:
            label, value = line.strip().split(",")
            rows.append((label, float(value)))
    return rows


def write_operator_csv(path: str | os.PathLike, h: np.ndarray) -> Path:
    """Sparse dump `row,col,re,im` of entries with magnitude above 1e-14."""
    h = np.asarray(h)
    lines = ["row,col,re,im"]
    rows, cols = np.nonzero(np.abs(h) > 1e-14)
    for r, c in zip(rows, cols):
        entry = h[r, c]
        lines.append(
            f"{r},{c},{format_float(entry.real)},{format_float(entry.imag)}"
        )
    return atomic_write_text(path, "\n".join(lines) + "\n")


def read_operator_csv(path: str | os.PathLike, dim: int) -> np.ndarray:
    h = np.zeros((dim, dim), dtype=np.complex128)
    with open(path) as handle:
        header = handle.readline().strip()
        if header != "row,col,re,im":
            raise ValueError(f"unexpected header in {path}: {header}")
        for line in handle:
            r, c, re, im = line.strip().split(",")
            h[int(r), int(c)] = float(re) + 1j * float(im)
    return h


def write_key_value(path: str | os.PathLike, entries: Mapping[str, object]) -> Path:
    """Flat `key = value` file (manifests and run configs)."""
    lines = [f"{key} = {entries[key]}" for key in entries]
    return atomic_write_text(path, "\n".join(lines) + "\n")


def read_key_value(path: str | os.PathLike) -> dict[str, str]:
    entries: dict[str, str] = {}
    with open(path) as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"malformed line in {path}: {raw!r}")
            key, value = line.split("=", 1)
            entries[key.strip()] = value.strip()
    return entries
