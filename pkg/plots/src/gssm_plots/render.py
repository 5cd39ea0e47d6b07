"""Matplotlib figure construction. Pure: stats in, Figure out."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def curve_figure(stats: list[dict], ylabel: str, title: str):
    """Mean line per group, +/-1 std band when a group has several runs."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    labels = sorted({row["group"] for row in stats})
    for label in labels:
        rows = [r for r in stats if r["group"] == label]
        xs = np.array([r["iteration"] for r in rows])
        mean = np.array([r["mean"] for r in rows])
        std = np.array([r["std"] for r in rows])
        (line,) = ax.plot(xs, mean, label=label, linewidth=1.6)
        if any(r["n"] > 1 for r in rows):
            ax.fill_between(xs, mean - std, mean + std,
                            color=line.get_color(), alpha=0.2, linewidth=0)
    ax.set_xlabel("iteration")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(alpha=0.3)
    ax.legend()
    fig.tight_layout()
    return fig


def bound_figure(stats: list[dict], frames):
    """Measured quantity vs its bound, one panel per inequality."""
    fig, axes = plt.subplots(1, 2, figsize=(9.6, 4.2))
    panels = [("lemma_bound", "max_gap", "value-gap vs simulation bound"),
              ("theorem_bound", "regret", "regret vs transfer bound")]
    for ax, (bound_col, measured_col, title) in zip(axes, panels):
        for frame in frames:
            xs = [r[bound_col] for r in frame.rows]
            ys = [r[measured_col] for r in frame.rows]
            ax.scatter(xs, ys, s=8, alpha=0.6, label=frame.run_id)
        lo, hi = _diag_range(axes=ax)
        ax.plot([lo, hi], [lo, hi], "k--", linewidth=1, label="y = x")
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel(bound_col)
        ax.set_ylabel(measured_col)
        ax.set_title(title)
        ax.grid(alpha=0.3, which="both")
    axes[0].legend(fontsize=7)
    total = sum(row["violations"] for row in stats)
    fig.suptitle(f"bound report: {total} violations")
    fig.tight_layout()
    return fig


def _diag_range(axes) -> tuple[float, float]:
    pts = [v for artist in axes.collections for v in artist.get_offsets().ravel()
           if v > 0]
    if not pts:
        return 1e-6, 1.0
    return min(pts), max(pts)


def save(fig, out_dir, stem: str) -> list[str]:
    """Write PNG and SVG, return the paths written."""
    from pathlib import Path

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for ext in ("png", "svg"):
        path = out / f"{stem}.{ext}"
        fig.savefig(path, dpi=150)
        paths.append(str(path))
    plt.close(fig)
    return paths
