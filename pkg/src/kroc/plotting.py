"""Figure rendering for the CLI report paths.

Figures are built with the object-oriented API on an Agg canvas, so no
display or pyplot global state is needed.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib as mpl
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from kroc.averaging import AveragedKsCurve, ProjectedRocBand
from kroc.curves import KsCurve, RocCurve
from kroc.metrics import max_ks2, mvd

STYLE = {
    "font.size": 10.0,
    "axes.labelsize": 11,
    "axes.titlesize": 11,
    "axes.linewidth": 0.8,
    "lines.linewidth": 1.5,
    "xtick.direction": "in",
    "ytick.direction": "in",
    "xtick.top": True,
    "ytick.right": True,
    "legend.fontsize": 9,
    "legend.frameon": False,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}


def _new_figure(ncols: int = 1) -> tuple[Figure, list]:
    fig = Figure(figsize=(4.5 * ncols, 4.2))
    FigureCanvasAgg(fig)
    axes = [fig.add_subplot(1, ncols, i + 1) for i in range(ncols)]
    return fig, axes


def _save(fig: Figure, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path)
    return path


def plot_eval(roc: RocCurve, ks: KsCurve, out_dir: str | Path) -> list[Path]:
    """ROC and KS curves side by side, with MVD and Max_KS2 marked.

    Writes ``curves.png`` under ``out_dir`` and returns the written paths.
    """
    out_dir = Path(out_dir)
    with mpl.rc_context(STYLE):
        fig, (ax_roc, ax_ks) = _new_figure(2)

        ax_roc.plot([0, 1], [0, 1], ls=":", color="0.5", label="chance")
        ax_roc.plot(roc.u, roc.v, color="C0", label="ROC")
        m = mvd(roc)
        i = int((roc.rank == m.rank).argmax())
        ax_roc.vlines(roc.u[i], roc.u[i], roc.v[i], color="C3", label=f"MVD = {m.value:.4g}")
        ax_roc.set(xlabel="false positive rate", ylabel="true positive rate",
                   xlim=(0, 1), ylim=(0, 1), aspect="equal", title="ROC")
        ax_roc.legend(loc="lower right")

        ax_ks.axhline(0.0, ls=":", color="0.5")
        ax_ks.plot(ks.x, ks.y, color="C1", label="KS")
        k = max_ks2(ks)
        j = int((ks.rank == k.rank).argmax())
        ax_ks.vlines(ks.x[j], 0.0, ks.y[j], color="C3", label=f"Max KS = {k.value:.4g}")
        ax_ks.set(xlabel="population fraction", ylabel="TPR - FPR",
                  xlim=(0, 1), title="KS")
        ax_ks.legend(loc="upper right")

        return [_save(fig, out_dir / "curves.png")]


def plot_average(avg: AveragedKsCurve, band: ProjectedRocBand, out_dir: str | Path) -> list[Path]:
    """Averaged KS curve with error bars, and its image in ROC space.

    Writes ``average.png`` under ``out_dir``.
    """
    out_dir = Path(out_dir)
    with mpl.rc_context(STYLE):
        fig, (ax_ks, ax_roc) = _new_figure(2)

        ax_ks.axhline(0.0, ls=":", color="0.5")
        ax_ks.fill_between(avg.grid, avg.mean_y - avg.stderr_y, avg.mean_y + avg.stderr_y,
                           color="C1", alpha=0.25, lw=0, label="± s.e.")
        ax_ks.plot(avg.grid, avg.mean_y, color="C1", label=f"mean of {avg.fold_count} folds")
        ax_ks.set(xlabel="population fraction", ylabel="TPR - FPR", xlim=(0, 1),
                  title="averaged KS")
        ax_ks.legend(loc="upper right")

        ax_roc.plot([0, 1], [0, 1], ls=":", color="0.5")
        ax_roc.plot(band.u, band.v, color="C0", label="projected mean")
        lo_u, lo_v = band.lower
        hi_u, hi_v = band.upper
        ax_roc.plot(lo_u, lo_v, color="C0", lw=0.6, alpha=0.6)
        ax_roc.plot(hi_u, hi_v, color="C0", lw=0.6, alpha=0.6, label="projected ± s.e.")
        ax_roc.set(xlabel="false positive rate", ylabel="true positive rate",
                   xlim=(0, 1), ylim=(0, 1), aspect="equal", title="ROC image")
        ax_roc.legend(loc="lower right")

        return [_save(fig, out_dir / "average.png")]
