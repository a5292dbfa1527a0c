"""Deterministic SVG figure rendering.

Figures are drawn with the Agg backend and saved as SVG with a pinned hash
salt and no creation-date metadata, so identical input arrays give
byte-identical files. Regenerating a figure from its CSV therefore
reproduces it exactly: the plots use only the data the CSVs carry.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

_HASH_SALT = "xxzchaos"

Curve = tuple[str, np.ndarray, np.ndarray]  # label, times, values


def _save(fig, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    return path


def plot_trajectories(
    path: str | Path,
    curves: Sequence[Curve],
    levels: Sequence[tuple[str, float]] = (),
    ylabel: str = "ensemble mean Q (extensive)",
    title: str | None = None,
) -> Path:
    """Overlay of mean-entanglement curves, with optional horizontal levels."""
    with plt.rc_context({"svg.hashsalt": _HASH_SALT}):
        fig, ax = plt.subplots(figsize=(7, 4.5))
        for label, times, values in curves:
            ax.plot(times, values, label=label)
        for label, level in levels:
            ax.axhline(level, linestyle="--", linewidth=0.9, color="gray")
            ax.annotate(
                f"{label}: {level:.3g}",
                (0.99, level),
                xycoords=("axes fraction", "data"),
                ha="right",
                va="bottom",
                fontsize=8,
            )
        ax.set_xlabel("t")
        ax.set_ylabel(ylabel)
        if title:
            ax.set_title(title)
        ax.legend(loc="lower right")
        return _save(fig, path)


def plot_trajectory_stack(
    path: str | Path,
    curves: Sequence[Curve],
    ylabel: str = "ensemble mean Q (extensive)",
) -> Path:
    """One subplot per curve, shared time axis."""
    with plt.rc_context({"svg.hashsalt": _HASH_SALT}):
        fig, axes = plt.subplots(
            len(curves), 1, figsize=(7, 2.5 * len(curves)), sharex=True, squeeze=False
        )
        for ax, (label, times, values) in zip(axes[:, 0], curves):
            ax.plot(times, values)
            ax.set_ylabel(ylabel, fontsize=8)
            ax.set_title(label, fontsize=9)
        axes[-1, 0].set_xlabel("t")
        fig.tight_layout()
        return _save(fig, path)


def plot_gamma(
    path: str | Path,
    values: np.ndarray,
    gammas: np.ndarray,
    xlabel: str = "lambda",
) -> Path:
    """Oscillation ratio against the swept parameter."""
    with plt.rc_context({"svg.hashsalt": _HASH_SALT}):
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.plot(values, gammas, marker="o")
        ax.set_xlabel(xlabel)
        ax.set_ylabel("gamma")
        return _save(fig, path)
