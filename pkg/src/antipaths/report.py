"""Report rendering: delimited rows and summary figures for stress runs.

Figures are written next to the delimited output as PNG files; matplotlib is
imported lazily with the Agg backend so the library never needs a display.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .stress import StressReport


def write_tsv(rows: list[dict], columns: list[str], path: str | Path) -> Path:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    with p.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns, delimiter="\t")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    return p


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams["figure.figsize"] = (6.0, 3.6)
    plt.rcParams["axes.grid"] = True
    plt.rcParams["grid.alpha"] = 0.3
    return plt


def render_figures(report: StressReport, outdir: str | Path) -> list[Path]:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    plt = _pyplot()
    written: list[Path] = []

    if report.mode == "exhaustive-n5":
        by_longest: dict[int, int] = {}
        by_delta: dict[int, dict[str, int]] = {}
        for row in report.rows:
            by_longest[row["longest"]] = by_longest.get(row["longest"], 0) + row["graphs"]
            d = by_delta.setdefault(row["pseudo_delta0"], {})
            d[row["outcome_forward"]] = d.get(row["outcome_forward"], 0) + row["graphs"]
        fig, ax = plt.subplots()
        xs = sorted(by_longest)
        ax.bar(xs, [by_longest[x] for x in xs], color="#47608a")
        ax.set_xlabel("longest alternating path length")
        ax.set_ylabel("graphs")
        ax.set_title("All oriented graphs on 5 vertices")
        path = out / "exhaustive_n5_longest.png"
        fig.savefig(path, bbox_inches="tight")
        plt.close(fig)
        written.append(path)

        fig, ax = plt.subplots()
        deltas = sorted(by_delta)
        outcomes = sorted({o for d in by_delta.values() for o in d})
        bottom = [0] * len(deltas)
        for outcome in outcomes:
            heights = [by_delta[d].get(outcome, 0) for d in deltas]
            ax.bar(deltas, heights, bottom=bottom, label=outcome)
            bottom = [b + h for b, h in zip(bottom, heights)]
        ax.set_xlabel("pseudo-semidegree")
        ax.set_ylabel("graphs")
        ax.set_yscale("log")
        ax.set_title("k=3 search outcome by pseudo-semidegree")
        ax.legend(fontsize=8)
        path = out / "exhaustive_n5_outcomes.png"
        fig.savefig(path, bbox_inches="tight")
        plt.close(fig)
        written.append(path)

    elif report.mode == "random-tournaments":
        fig, ax = plt.subplots()
        ax.scatter(
            [r["pseudo_delta0"] for r in report.rows],
            [r["k"] for r in report.rows],
            s=18,
            alpha=0.6,
            color="#47608a",
        )
        ax.set_xlabel("pseudo-semidegree")
        ax.set_ylabel("largest guaranteed k")
        ax.set_title(f"Tournament trials (n={report.rows[0]['n'] if report.rows else '?'})")
        path = out / "tournaments_delta_vs_k.png"
        fig.savefig(path, bbox_inches="tight")
        plt.close(fig)
        written.append(path)

        fig, ax = plt.subplots()
        lengths = [r["length"] for r in report.rows]
        ax.hist(lengths, bins=range(min(lengths or [0]), max(lengths or [1]) + 2), color="#7a9a63")
        ax.set_xlabel("certificate path length")
        ax.set_ylabel("trials")
        ax.set_title("Found path lengths")
        path = out / "tournaments_lengths.png"
        fig.savefig(path, bbox_inches="tight")
        plt.close(fig)
        written.append(path)

    elif report.mode == "dense":
        fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9.0, 3.6))
        ax1.scatter(
            [r["edges"] for r in report.rows],
            [r["core_edges"] for r in report.rows],
            s=18,
            alpha=0.6,
            color="#47608a",
        )
        ax1.set_xlabel("input edges")
        ax1.set_ylabel("edges after peeling")
        deltas = [r["core_pseudo_delta0"] for r in report.rows]
        ax2.hist(deltas, bins=range(min(deltas or [0]), max(deltas or [1]) + 2), color="#7a9a63")
        ax2.set_xlabel("peeled pseudo-semidegree")
        ax2.set_ylabel("trials")
        fig.suptitle("Density-route trials")
        path = out / "dense_peeling.png"
        fig.savefig(path, bbox_inches="tight")
        plt.close(fig)
        written.append(path)

    return written
