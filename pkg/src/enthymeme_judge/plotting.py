"""Figure rendering for score reports.

Two figures per report: a ranking bar chart of aggregate scores and a
candidates-by-measures heatmap of per-measure values. Rendering uses the Agg
backend and writes PNG files; it never opens a window.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_plots(report: dict, outdir: str) -> list[str]:
    """Render the ranking chart and the measure heatmap for a score report.
    Returns the written paths."""
    os.makedirs(outdir, exist_ok=True)
    results = report["results"]
    ids = [r["id"] for r in results]
    scores = [float(r["score_decimal"]) for r in results]
    paths = []

    fig, ax = plt.subplots(figsize=(max(4.0, 1.2 * len(ids) + 2), 3.5))
    ax.bar(range(len(ids)), scores, color="#4878a8")
    ax.set_xticks(range(len(ids)))
    ax.set_xticklabels(ids)
    ax.set_ylim(0, 1.05)
    ax.set_ylabel(f"quality ({report['aggregator']})")
    ax.set_title("decoding ranking")
    fig.tight_layout()
    path = os.path.join(outdir, "ranking.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    paths.append(path)

    measures = report["measures"]
    grid = [[float(v["value_decimal"]) for v in r["values"]] for r in results]
    fig, ax = plt.subplots(
        figsize=(max(4.0, 0.9 * len(measures) + 2), max(2.5, 0.6 * len(ids) + 1.5)))
    if grid:
        im = ax.imshow(grid, cmap="viridis", vmin=0.0, vmax=1.0, aspect="auto")
        fig.colorbar(im, ax=ax, label="measure value")
    ax.set_xticks(range(len(measures)))
    ax.set_xticklabels(measures, rotation=45, ha="right")
    ax.set_yticks(range(len(ids)))
    ax.set_yticklabels(ids)
    ax.set_title("criterion measures")
    fig.tight_layout()
    path = os.path.join(outdir, "measures.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    paths.append(path)
    return paths
