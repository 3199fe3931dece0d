"""Averaging KS curves across folds or ensemble members.

The KS abscissa is the population quantile, shared by every fold, so the
folds can be sampled at fixed quantiles and averaged vertically with no
threshold bookkeeping.  The mean curve and its vertical error bars are then
carried into ROC space by the KS -> ROC map of the pooled prevalence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np
from numpy.typing import NDArray

from kroc.curves import ClassCounts, KsCurve, RocCurve
from kroc.errors import InsufficientFolds
from kroc.transform import KsRocTransform, apply_to_point, make_transform

__all__ = [
    "AveragedKsCurve",
    "DEFAULT_GRID_SIZE",
    "ProjectedRocBand",
    "VerticalRocAverage",
    "average_ks_curves",
    "make_grid",
    "project_average_to_roc",
    "vertical_average_roc",
]

DEFAULT_GRID_SIZE = 101

Grid = Union[int, Sequence[float], NDArray[np.float64]]


@dataclass(frozen=True)
class AveragedKsCurve:
    grid: NDArray[np.float64]
    mean_y: NDArray[np.float64]
    stderr_y: NDArray[np.float64]
    fold_count: int
    pooled_counts: ClassCounts

    @property
    def transform(self) -> KsRocTransform:
        return make_transform(self.pooled_counts)


@dataclass(frozen=True)
class ProjectedRocBand:
    """Mean ROC points with error-bar components per quantile.

    The bar at each point runs from ``(u - du, v - dv)`` to
    ``(u + du, v + dv)``.  Since the KS bar is vertical, ``du <= 0 <= dv``.
    """

    grid: NDArray[np.float64]
    u: NDArray[np.float64]
    v: NDArray[np.float64]
    du: NDArray[np.float64]
    dv: NDArray[np.float64]
    prevalence: float

    @property
    def lower(self) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        return self.u - self.du, self.v - self.dv

    @property
    def upper(self) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        return self.u + self.du, self.v + self.dv


@dataclass(frozen=True)
class VerticalRocAverage:
    grid: NDArray[np.float64]
    mean_v: NDArray[np.float64]
    stderr_v: NDArray[np.float64]
    fold_count: int


def make_grid(grid: Grid) -> NDArray[np.float64]:
    """Equally spaced points on [0, 1] for an int, else a validated copy."""
    if isinstance(grid, (int, np.integer)):
        if grid < 2:
            raise ValueError(f"grid_size must be >= 2, got {grid}")
        return np.linspace(0.0, 1.0, int(grid))
    g = np.array(grid, dtype=np.float64)
    if g.ndim != 1 or g.size < 2 or g[0] != 0.0 or g[-1] != 1.0:
        raise ValueError("an explicit grid must be 1-D and run from 0 to 1")
    if np.any(np.diff(g) <= 0):
        raise ValueError("grid must be strictly increasing")
    return g


def _mean_and_stderr(rows: NDArray[np.float64]):
    k = rows.shape[0]
    return rows.mean(axis=0), rows.std(axis=0, ddof=1) / math.sqrt(k)


def average_ks_curves(
    curves: Sequence[KsCurve], grid_size: Grid = DEFAULT_GRID_SIZE
) -> AveragedKsCurve:
    """Mean and standard error of the folds' ``y`` at fixed quantiles.

    Each fold is linearly interpolated, which is exact on a polyline.  Pass
    an explicit grid (or ``m * n + 1`` points for folds of size ``n``) to
    sample every fold vertex.
    """
    if len(curves) < 2:
        raise InsufficientFolds(f"need at least 2 curves, got {len(curves)}")
    grid = make_grid(grid_size)
    rows = np.stack([np.interp(grid, c.x, c.y) for c in curves])
    mean, se = _mean_and_stderr(rows)
    # endpoints are pinned for every fold; clear rounding noise from interp
    mean[[0, -1]] = 0.0
    se[[0, -1]] = 0.0
    pooled = curves[0].counts
    for c in curves[1:]:
        pooled = pooled + c.counts
    return AveragedKsCurve(grid, mean, se, len(curves), pooled)


def project_average_to_roc(avg: AveragedKsCurve) -> ProjectedRocBand:
    t = avg.transform
    p = t.prevalence
    u, v = apply_to_point(t, (avg.grid, avg.mean_y))
    du = 0.0 - p * avg.stderr_y  # avoids -0.0 in output
    dv = (1.0 - p) * avg.stderr_y
    return ProjectedRocBand(avg.grid, u, v, du, dv, p)


def _upper_envelope(u: NDArray, v: NDArray):
    # a vertical ROC run at one u keeps only its top vertex
    keep = np.append(u[1:] != u[:-1], True)
    return u[keep], v[keep]


def vertical_average_roc(
    curves: Sequence[RocCurve], grid_size: Grid = DEFAULT_GRID_SIZE
) -> VerticalRocAverage:
    """Classic vertical averaging of ROC curves: mean TPR at fixed FPR.

    Where a fold has a vertical run at some FPR, the highest TPR of that run
    is used.  Provided for comparison with the KS route.
    """
    if len(curves) < 2:
        raise InsufficientFolds(f"need at least 2 curves, got {len(curves)}")
    grid = make_grid(grid_size)
    rows = np.stack([np.interp(grid, *_upper_envelope(c.u, c.v)) for c in curves])
    mean, se = _mean_and_stderr(rows)
    return VerticalRocAverage(grid, mean, se, len(curves))
