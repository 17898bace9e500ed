"""Figures written next to the CLI's text output."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Arc  # noqa: E402

from .core import Tournament, backedges  # noqa: E402


def plot_report(report, path: str | Path) -> Path:
    """Bar chart of instances checked per vertex count."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(5, 3))
    ns = [n for n, _ in report.per_n]
    counts = [c for _, c in report.per_n]
    ax.bar([str(n) for n in ns], counts, color="tab:green" if report.passed else "tab:red")
    ax.set_xlabel("vertices")
    ax.set_ylabel("instances checked")
    ax.set_title(f"{report.theorem_id}: {'pass' if report.passed else 'fail'}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_backedges(t: Tournament, order: Sequence[int], path: str | Path, title: str = "") -> Path:
    """Vertices on a line in the given order, backedges drawn as arcs above it."""
    path = Path(path)
    n = len(order)
    fig, ax = plt.subplots(figsize=(max(3, 0.6 * n + 1), 2.2))
    ax.plot(range(1, n + 1), [0] * n, "o", color="black")
    for p, v in enumerate(order, start=1):
        ax.annotate(str(v + 1), (p, 0), textcoords="offset points", xytext=(0, -14), ha="center")
    top = 0.5
    for j, i in backedges(t, order):
        width = j - i
        ax.add_patch(Arc(((i + j) / 2 + 1, 0), width, width, theta1=0, theta2=180, color="tab:blue"))
        top = max(top, width / 2)
    ax.set_xlim(0.5, n + 0.5)
    ax.set_ylim(-0.6, top + 0.3)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
