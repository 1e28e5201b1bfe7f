"""Figure construction and disk output.

Importing this module selects the Agg backend — this is a batch renderer,
nothing here ever opens a window. Output is reproducible byte for byte:
PNG is deterministic as-is, SVG gets a fixed hash salt and no date stamp,
PDF drops its creation date.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "bpfigs"

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
from matplotlib.figure import Figure  # noqa: E402

from .data import DataError, error_rate, group_rows, load_rows, numeric
from .figspec import FigureSpec

_SAVE_METADATA = {
    ".svg": {"Date": None},
    ".pdf": {"CreationDate": None},
}

_PAULI_STYLES = (("pI", "-"), ("pX", "--"), ("pY", "-."), ("pZ", ":"))


def build_figure(spec: FigureSpec) -> Figure:
    """Load the spec's CSVs and draw the figure (no file output)."""
    rows = load_rows(spec)
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    if spec.kind == "error_rate":
        _draw_error_rate(ax, rows, spec)
    elif spec.kind == "avg_iter":
        _draw_avg_iter(ax, rows, spec)
    else:
        _draw_trace(ax, rows, spec)
    xscale, yscale = spec.scales()
    ax.set_xscale(xscale)
    ax.set_yscale(yscale)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    if spec.title:
        ax.set_title(spec.title)
    fig.tight_layout()
    return fig


def render(spec: FigureSpec) -> str:
    """Draw and write the image; returns the output path."""
    fig = build_figure(spec)
    try:
        save_figure(fig, spec.out)
    finally:
        plt.close(fig)
    return spec.out


def save_figure(fig: Figure, out: str) -> None:
    meta = _SAVE_METADATA.get(Path(out).suffix.lower())
    fig.savefig(out, dpi=100, metadata=meta)


# -- the three figure kinds ----------------------------------------------------


def _series_points(grp, xcol, ycols):
    """Sorted-by-x tuples (x, y...) for one series."""
    pts = sorted((numeric(r, xcol), *(fn(r) if callable(fn) else numeric(r, fn)
                                      for fn in ycols)) for r in grp)
    return list(zip(*pts))


def _draw_error_rate(ax, rows, spec):
    for label, grp in group_rows(rows, spec.series_keys()):
        eps, rate, lo, hi = _series_points(
            grp, "epsilon", (error_rate, "ci_low", "ci_high"))
        (line,) = ax.plot(eps, rate, marker="o", ms=4, lw=1.1, label=label)
        color = line.get_color()
        # interval bars: vertical segment capped by crosses
        ax.vlines(eps, lo, hi, colors=color, lw=0.9)
        ax.plot(eps, lo, ls="none", marker="x", ms=5, color=color)
        ax.plot(eps, hi, ls="none", marker="x", ms=5, color=color)
    ax.set_xlabel("depolarizing rate")
    ax.set_ylabel("logical error rate")


def _draw_avg_iter(ax, rows, spec):
    for label, grp in group_rows(rows, spec.series_keys()):
        eps, avg = _series_points(grp, "epsilon", ("avg_iter",))
        ax.plot(eps, avg, marker="o", ms=4, lw=1.1, label=label)
    ax.set_xlabel("depolarizing rate")
    ax.set_ylabel("average iterations")


def _draw_trace(ax, rows, spec):
    for label, grp in group_rows(rows, spec.series_keys()):
        it, *probs = _series_points(grp, "iteration",
                                    tuple(col for col, _ in _PAULI_STYLES))
        for (col, style), ys in zip(_PAULI_STYLES, probs):
            ax.plot(it, ys, ls=style, marker=".", ms=4, lw=1.0,
                    label=f"{label} {col[1]}")
    ax.set_xlabel("iteration")
    ax.set_ylabel("probability")
    ax.set_ylim(-0.02, 1.02)
