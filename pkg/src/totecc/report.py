"""Delimited reports and companion figures for extremal scans.

The CSV layout is one row per (class, n) cell:

    class,n,count,min_tau,max_tau,min_witnesses,max_witnesses

where the witness columns carry counts.  ``render_figure`` draws the min/max
tau envelopes per class against the order, to a file next to the CSV.  All
writes go through a temporary file and an atomic rename so a failed run
never leaves a partial report behind.
"""

from __future__ import annotations

import csv
import io
import os
from pathlib import Path
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .enumeration import ExtremalReport

CSV_HEADER = ("class", "n", "count", "min_tau", "max_tau", "min_witnesses", "max_witnesses")


def report_rows(reports: Iterable[ExtremalReport]) -> list[tuple]:
    return [
        (
            r.graph_class, r.n, r.count, r.min_tau, r.max_tau,
            len(r.min_witnesses), len(r.max_witnesses),
        )
        for r in reports
    ]


def format_csv(reports: Iterable[ExtremalReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(report_rows(reports))
    return buf.getvalue()


def atomic_write_text(text: str, path: str | Path) -> None:
    target = Path(path)
    tmp = target.with_name(target.name + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, target)


def write_csv(reports: Sequence[ExtremalReport], path: str | Path) -> None:
    atomic_write_text(format_csv(reports), path)


def render_figure(reports: Sequence[ExtremalReport], path: str | Path) -> None:
    """Plot the tau envelopes (one min and one max curve per class)."""
    by_class: dict[str, list[ExtremalReport]] = {}
    for r in reports:
        by_class.setdefault(r.graph_class, []).append(r)

    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    for graph_class, rows in sorted(by_class.items()):
        rows = sorted(rows, key=lambda r: r.n)
        ns = [r.n for r in rows]
        ax.plot(ns, [r.max_tau for r in rows], marker="o", label=f"{graph_class} max")
        ax.plot(
            ns, [r.min_tau for r in rows], marker="s", linestyle="--",
            label=f"{graph_class} min",
        )
    ax.set_xlabel("order n")
    ax.set_ylabel("total eccentricity")
    ax.set_title("extremal total-eccentricity envelopes")
    ax.grid(True, alpha=0.3)
    ax.legend(fontsize=8)
    fig.tight_layout()

    target = Path(path)
    tmp = target.with_name(target.name + ".tmp" + target.suffix)
    fig.savefig(tmp)
    plt.close(fig)
    os.replace(tmp, target)
