"""Figures written next to report output (``--plot``)."""

from __future__ import annotations

from typing import Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .coding import CodeTable
from .distributions import SymbolDistribution
from .entropy import entropy, raw_storage_digits, surprisal, unit_name


def plot_symbol_costs(
    dist: SymbolDistribution,
    base: int,
    path,
    table: Optional[CodeTable] = None,
    title: Optional[str] = None,
):
    """Bar chart of per-symbol surprisal, with codeword lengths if a table is given.

    The dashed line marks the entropy; the dotted line marks the fixed-width
    raw cost. Returns the saved figure.
    """
    syms = [s for s, p in dist.items() if p > 0]
    labels = [dist.label(s) for s in syms]
    info = [surprisal(dist.probabilities[dist.index(s)], base) for s in syms]
    x = list(range(len(syms)))
    width = 0.4 if table is not None else 0.8

    fig, ax = plt.subplots(figsize=(max(4.0, 0.35 * len(syms) + 2), 3.2))
    ax.bar([i - width / 2 if table is not None else i for i in x], info, width,
           label="surprisal", color="#4c72b0")
    if table is not None:
        lengths = [len(table[s]) if s in table else 0 for s in syms]
        ax.bar([i + width / 2 for i in x], lengths, width, label="code length", color="#dd8452")
    h = entropy(dist, base)
    ax.axhline(h, ls="--", lw=1, color="k", label=f"entropy {h:.4g}")
    raw = raw_storage_digits(len(dist), base)
    ax.axhline(raw, ls=":", lw=1, color="gray", label=f"raw {raw}")

    ax.set_xticks(x)
    ax.set_xticklabels(labels, fontsize=7 if len(syms) > 20 else 9)
    ax.set_ylabel(unit_name(base))
    if title:
        ax.set_title(title, fontsize=10)
    ax.legend(fontsize=7, frameon=False, ncol=4, loc="upper center", bbox_to_anchor=(0.5, -0.12))
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return fig
