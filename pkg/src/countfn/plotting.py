"""Growth figures for the CLI report path."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .oracle import WitnessFamily, family_values, level_sup  # noqa: E402


def plot_growth(path, f, max_len: int, family: WitnessFamily | None = None, title: str | None = None) -> None:
    """Write a PNG with max |f| per word length and, if given, f along a witness family."""
    ncols = 2 if family is not None else 1
    fig, axes = plt.subplots(1, ncols, figsize=(5.5 * ncols, 4), squeeze=False)
    ax = axes[0][0]
    sups = level_sup(f, max_len)
    ax.plot(range(len(sups)), [float(s) for s in sups], marker="o", color="tab:blue")
    ax.set_xlabel("word length")
    ax.set_ylabel("max |f(w)|")
    ax.set_title("sup by length")
    ax.grid(alpha=0.3)

    if family is not None:
        ax = axes[0][1]
        k_max = family.tested_range
        vals = family_values(f, f.alphabet, family.prefix, family.period, k_max)
        ks = list(range(k_max + 1))
        ax.plot(ks, [float(v) for v in vals], ".", color="tab:red", label="f(u v^k)")
        offset = float(vals[1] - family.slope)
        ax.plot(ks, [offset + float(family.slope) * k for k in ks], "-", color="0.4", lw=1, label=f"slope {family.slope}")
        ax.set_xlabel("k")
        ax.set_title(f"v = {family.period}")
        ax.legend(frameon=False)
        ax.grid(alpha=0.3)

    if title:
        fig.suptitle(title)
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
