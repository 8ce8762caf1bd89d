"""Figures for reports: Ass-sequence membership grids and 2-variable staircases."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Rectangle  # noqa: E402

from .assoc import AssSet, corner_elements  # noqa: E402
from .ideal import MonomialIdeal, MonomialPrime  # noqa: E402

plt.rcParams.update({
    "font.size": 10,
    "axes.titlesize": 11,
    "savefig.dpi": 150,
})


def _save(fig, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path


def plot_ass_sequence(sets: Sequence[AssSet], path: str | Path, title: str = "") -> Path:
    """Grid with one row per prime and one column per power s; filled cells mark p in Ass(R/I^s)."""
    primes = sorted({p for A in sets for p in A}, key=MonomialPrime.sort_key)
    rows = len(primes)
    cols = len(sets)
    fig, ax = plt.subplots(figsize=(1.2 + 0.55 * cols, 0.8 + 0.35 * max(rows, 1)))
    for r, p in enumerate(primes):
        color = "tab:red" if p.is_maximal() else "tab:blue"
        for c, A in enumerate(sets):
            if p in A:
                ax.add_patch(Rectangle((c + 0.1, r + 0.1), 0.8, 0.8, color=color))
            else:
                ax.add_patch(Rectangle((c + 0.1, r + 0.1), 0.8, 0.8, fill=False, ec="0.8"))
    ax.set_xlim(0, cols)
    ax.set_ylim(rows, 0)
    ax.set_xticks([c + 0.5 for c in range(cols)], [str(c + 1) for c in range(cols)])
    ax.set_yticks([r + 0.5 for r in range(rows)], [str(p) for p in primes])
    ax.set_xlabel("power s")
    ax.set_title(title or "Ass(R/I^s)")
    ax.tick_params(length=0)
    for side in ("top", "right", "left", "bottom"):
        ax.spines[side].set_visible(False)
    return _save(fig, path)


def plot_staircase(I: MonomialIdeal, path: str | Path, title: str = "", mark_corners: bool = True) -> Path:
    """Staircase of a monomial ideal in two variables, with its corner elements."""
    if I.ctx.n != 2:
        raise ValueError("staircase plots need a ring with exactly two variables")
    gens = sorted(I.gens)
    top = [max(g[i] for g in gens) for i in range(2)] if gens else [1, 1]
    w, h = top[0] + 2, top[1] + 2
    fig, ax = plt.subplots(figsize=(4, 4))
    for a in range(w):
        for b in range(h):
            inside = any(g[0] <= a and g[1] <= b for g in gens)
            if inside:
                ax.add_patch(Rectangle((a, b), 1, 1, color="0.85"))
    gx = [g[0] + 0.5 for g in gens]
    gy = [g[1] + 0.5 for g in gens]
    ax.scatter(gx, gy, color="tab:blue", zorder=3, label="minimal generators")
    if mark_corners and I.is_proper_nonzero():
        cs = [w_.monomial.exps for w_ in corner_elements(I)]
        if cs:
            ax.scatter([c[0] + 0.5 for c in cs], [c[1] + 0.5 for c in cs], marker="s",
                       color="tab:red", zorder=3, label="corner elements")
    x, y = I.ctx.variables
    ax.set_xlim(0, w)
    ax.set_ylim(0, h)
    ax.set_xticks(range(w))
    ax.set_yticks(range(h))
    ax.set_xlabel(f"exponent of {x}")
    ax.set_ylabel(f"exponent of {y}")
    ax.set_aspect("equal")
    ax.grid(True, color="0.9", lw=0.5)
    ax.legend(loc="upper right", fontsize=8)
    ax.set_title(title or str(I))
    return _save(fig, path)
