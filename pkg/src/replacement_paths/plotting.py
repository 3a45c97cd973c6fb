"""Static figures for benchmark reports."""
from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

RC = {
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
}


def plot_bench(rows: Sequence[dict], path: str, bound: float = 8.0) -> None:
    """Operation counts against ``m + l^2`` and wall times against ``m``."""
    size = [r["m"] + r["l"] ** 2 for r in rows]
    with plt.rc_context(RC):
        fig, (ax_ops, ax_time) = plt.subplots(1, 2, figsize=(8, 3.2))

        ax_ops.loglog(size, [r["phase2_ops"] for r in rows], "o-", label="phase-2 operations")
        ax_ops.loglog(size, [bound * x for x in size], "k--", lw=0.8, label=f"{bound:g}(m + l²)")
        ax_ops.set_xlabel("m + l²")
        ax_ops.set_ylabel("operations")
        ax_ops.legend(frameon=False)

        ms = [r["m"] for r in rows]
        ax_time.loglog(ms, [r["phase2_seconds"] for r in rows], "o-", label="RSP-DAG pipeline")
        brute = [(r["m"], r["brute_seconds"]) for r in rows if r["brute_seconds"] is not None]
        if brute:
            ax_time.loglog(*zip(*brute), "s-", label="brute force")
        ax_time.set_xlabel("m")
        ax_time.set_ylabel("seconds")
        ax_time.legend(frameon=False)

        fig.tight_layout()
        fig.savefig(path, dpi=150)
        plt.close(fig)
