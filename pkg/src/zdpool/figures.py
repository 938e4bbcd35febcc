"""File-based figure rendering for the report path.

Renders the flattened tables produced by the preset batteries, and the
per-series outputs of configured runs, to PNG files next to the CSVs.
Uses a non-interactive backend throughout; nothing here opens a window.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .replicate import FigureDataset

__all__ = ["render_dataset", "render_series"]


def render_series(
    groups: "dict[str, tuple[list, list]]",
    path: str,
    xlabel: str,
    ylabel: str,
    title: str,
    hline: "float | None" = None,
) -> None:
    """One line per labeled (x, y) series, written to ``path``."""
    fig, ax = plt.subplots(figsize=(7.2, 4.6))
    for label, (xs, ys) in groups.items():
        ax.plot(xs, ys, linewidth=1.4, label=label)
    if hline is not None:
        ax.axhline(hline, color="grey", linestyle="--", linewidth=1.0)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    if len(groups) <= 16:
        ax.legend(fontsize=8, ncol=2)
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)


def render_dataset(dataset: FigureDataset, path: str) -> None:
    """Render one preset battery's table to ``path``."""
    groups: dict[str, tuple[list, list]] = {}
    if dataset.figure == 1:
        for round_no, series, mean, _se in dataset.rows:
            xs, ys = groups.setdefault(str(series), ([], []))
            xs.append(round_no)
            ys.append(mean)
        render_series(
            groups,
            path,
            xlabel="round",
            ylabel="cumulative miner payoff",
            title="pinned payoff convergence, four classical miners",
            hline=8.0 / 3.0,
        )
        return
    for row in dataset.rows:
        round_no, q0, power = row[0], row[1], row[2]
        mean = row[-2]
        label = f"q0={q0:g}, power={power:g}"
        xs, ys = groups.setdefault(label, ([], []))
        xs.append(round_no)
        ys.append(mean)
    kind = "belief-tracking" if dataset.figure == 4 else "history-free"
    render_series(
        groups,
        path,
        xlabel="round",
        ylabel="cooperation probability",
        title=f"{kind} miners under the reward mechanism",
        hline=1.0,
    )
