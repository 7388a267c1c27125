"""Figures for benchmark reports, written next to the CSV/JSON output."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}


def _finish(fig, ax, path):
    ax.grid(alpha=0.25, linewidth=0.6)
    ax.set_axisbelow(True)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_counters(rows, path):
    """Build counters against the number of reachable vertices, one point per row."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.8, 3.2))
        x = [r["vertices_placed"] for r in rows]
        ax.scatter(x, [r["adjacency_cells_read"] for r in rows], s=12,
                   label="adjacency cells read")
        ax.scatter(x, [r["levels_built"] for r in rows], s=12, marker="s",
                   label="levels built")
        ax.scatter(x, [r["extraction_touches_max"] for r in rows], s=12, marker="^",
                   label="max extraction touches")
        ax.set_xlabel("vertices placed")
        ax.set_ylabel("count")
        ax.legend(frameon=False)
        return _finish(fig, ax, path)


def plot_timing(rows, path):
    """Projection build time against BFS time, log-log, with the diagonal."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(3.6, 3.4))
        bfs = [r["bfs_seconds"] * 1e6 for r in rows]
        build = [r["build_seconds"] * 1e6 for r in rows]
        ax.scatter(bfs, build, s=12)
        lo = max(min(bfs + build), 1e-3)
        hi = max(bfs + build)
        ax.plot([lo, hi], [lo, hi], color="0.5", linewidth=0.8, linestyle="--")
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("BFS oracle [µs]")
        ax.set_ylabel("refined build [µs]")
        return _finish(fig, ax, path)


def plot_bench(rows, out_dir, stem="bench"):
    """Render every benchmark figure into ``out_dir``; returns the file paths."""
    if not rows:
        return []
    os.makedirs(out_dir, exist_ok=True)
    return [
        plot_counters(rows, os.path.join(out_dir, f"{stem}-counters.png")),
        plot_timing(rows, os.path.join(out_dir, f"{stem}-timing.png")),
    ]
