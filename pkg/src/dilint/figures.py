"""Occurrence-table chart rendered next to the delimited report output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .detectors import RULE_ORDER
from .reporting import OccurrenceTable

__all__ = ["render_occurrence_chart"]


def render_occurrence_chart(table: OccurrenceTable, path: str | Path) -> Path:
    """Save a bar chart of per-rule finding counts; format follows the file
    suffix (png, svg, pdf)."""
    path = Path(path)
    counts = [table.counts.get(rule_id, 0) for rule_id in RULE_ORDER]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    bars = ax.bar(RULE_ORDER, counts, color="#4878a8")
    ax.bar_label(bars, padding=2, fontsize=8)
    ax.set_ylabel("findings")
    ax.set_title(
        f"DI anti-pattern occurrences: {table.project_label} "
        f"({table.total_files} files, {table.total_classes} classes)"
    )
    ax.margins(y=0.12)
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
