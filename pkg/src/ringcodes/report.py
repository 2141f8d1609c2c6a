"""Verification report rendering: delimited output plus summary figures."""

from __future__ import annotations

import csv
from pathlib import Path
from typing import List

from .verify import RowResult

__all__ = ["write_tsv", "write_figure", "write_report"]

_STATUS_COLORS = {"PASS": "#2a9d42", "FAIL": "#c03221", "SKIP": "#9a9a9a"}


def write_tsv(results: List[RowResult], path) -> None:
    path = Path(path)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, delimiter="\t")
        writer.writerow([
            "field", "group", "n", "k", "d", "flags", "tier",
            "status", "computed_k", "computed_d", "computed_flags",
            "reason", "notes", "seconds",
        ])
        for res in results:
            rec = res.record
            writer.writerow([
                rec.field.q,
                rec.group.notation(),
                rec.n,
                rec.k,
                rec.d,
                "".join(sorted(rec.flags)),
                rec.tier,
                res.status,
                res.computed_k if res.computed_k is not None else "",
                res.computed_d if res.computed_d is not None else "",
                "".join(sorted(res.computed_flags)),
                res.reason,
                ";".join(res.notes),
                f"{res.elapsed:.3f}",
            ])


def write_figure(results: List[RowResult], path) -> None:
    """Render an [n, k] scatter colored by status, annotated with d."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, (ax, ax2) = plt.subplots(
        1, 2, figsize=(11, 4.5), gridspec_kw={"width_ratios": [3, 1]})
    for status, color in _STATUS_COLORS.items():
        xs = [r.record.n for r in results if r.status == status]
        ys = [r.record.k for r in results if r.status == status]
        if xs:
            ax.scatter(xs, ys, c=color, label=status, s=28, zorder=3)
    for r in results:
        ax.annotate(str(r.record.d), (r.record.n, r.record.k),
                    textcoords="offset points", xytext=(4, 3), fontsize=7)
    ax.set_xlabel("length n")
    ax.set_ylabel("dimension k")
    ax.set_title("verified codes (annotated with d)")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="lower right", fontsize=8)

    counts = {s: sum(1 for r in results if r.status == s) for s in _STATUS_COLORS}
    ax2.bar(list(counts), list(counts.values()),
            color=[_STATUS_COLORS[s] for s in counts])
    ax2.set_title("row status")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(results: List[RowResult], out_dir) -> List[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    tsv = out_dir / "report.tsv"
    png = out_dir / "report.png"
    write_tsv(results, tsv)
    write_figure(results, png)
    return [tsv, png]
