"""Benchmark report figures rendered next to the CSV output."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def save_bench_figure(rows: Sequence[dict], kind: str, path: str) -> None:
    """Log-log scaling plot of iterations and corner reads against size.

    One marker per benchmark row plus the guaranteed bound lines, so a
    bound violation would be visible as a marker above its line.
    """
    sizes = [r["n0"] + r["n1"] for r in rows]
    iters = [r["iterations"] for r in rows]
    reads = [r["corner_reads"] for r in rows]
    bound_iter = 5 if kind == "separating" else 4
    bound_read = 15 if kind == "separating" else 13

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    span = sorted(set(sizes))
    ax1.loglog(sizes, iters, "o", ms=4, label="measured")
    ax1.loglog(span, [bound_iter * s for s in span], "k--", lw=1,
               label=f"{bound_iter}(n0+n1) bound")
    ax1.set_xlabel("n0 + n1")
    ax1.set_ylabel("loop iterations")
    ax1.legend(fontsize=8)
    ax2.loglog(sizes, reads, "o", ms=4, color="#c24a30", label="measured")
    ax2.loglog(span, [bound_read * s + 16 for s in span], "k--", lw=1,
               label=f"{bound_read}(n0+n1)+16 bound")
    ax2.set_xlabel("n0 + n1")
    ax2.set_ylabel("corner reads")
    ax2.legend(fontsize=8)
    fig.suptitle(f"{kind} tangent walk scaling")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
