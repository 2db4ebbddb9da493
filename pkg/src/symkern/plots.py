"""Figure rendering for the CLI report path (matplotlib, Agg backend)."""

from __future__ import annotations

from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def render_line_plot(
    path: str,
    x: Sequence[float],
    series: Mapping[str, Sequence[float]],
    xlabel: str,
    ylabel: str,
    title: str | None = None,
    marker: tuple[float, float] | None = None,
) -> None:
    """Render one or more curves over a common abscissa to ``path``."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for label, y in series.items():
        ax.plot(x, y, label=label, linewidth=1.4)
    if marker is not None:
        ax.plot([marker[0]], [marker[1]], "o", color="black", markersize=5)
        ax.annotate(
            f"({marker[0]:.4f}, {marker[1]:.4f})",
            marker,
            textcoords="offset points",
            xytext=(8, -12),
            fontsize=9,
        )
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    if len(series) > 1:
        ax.legend()
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
