"""Area and single-point metrics over ROC and KS curves.

Both curves are polylines, so the trapezoid rule over their vertices gives
the exact area rather than an approximation.  Areas are summed on the
integer class counts behind each vertex and rounded once.
:func:`auc_pairwise_oracle` is a deliberately separate route to the same
ROC area (brute-force pair counting) used to cross-check the geometry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from kroc.curves import KsCurve, LabeledSample, RocCurve, build_curves, tally_classes

__all__ = [
    "AreaReport",
    "PointMetric",
    "auc_ks",
    "auc_pairwise_oracle",
    "auc_roc",
    "gini",
    "max_ks2",
    "max_ks2_projection",
    "mvd",
    "polyline_area",
    "verify_identity",
]

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class PointMetric:
    """A metric value with the vertex (rank, population fraction) attaining it."""

    value: float
    rank: int
    x: float


@dataclass(frozen=True)
class AreaReport:
    auc_roc: float
    auc_ks: float
    gini: float
    identity_residual: float  # auc_roc - 0.5 - auc_ks


def polyline_area(xs: np.ndarray, ys: np.ndarray) -> float:
    """Signed trapezoid area between a float polyline and the x axis."""
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    return float(np.sum(np.diff(xs) * (ys[1:] + ys[:-1])) / 2.0)


def _dot(a: np.ndarray, b: np.ndarray, bound: int) -> int:
    # int64 while the bound allows it, Python ints beyond
    if bound < 2**62:
        return int(np.dot(a, b))
    return sum(int(p) * int(q) for p, q in zip(a.tolist(), b.tolist()))


def _roc_area_ratio(curve: RocCurve) -> tuple[int, int]:
    nt, nc = curve.counts.n_target, curve.counts.n_complement
    t = curve.cum_target
    num = _dot(np.diff(curve.cum_complement), t[1:] + t[:-1], 2 * nt * nc)
    return num, 2 * nt * nc


def _ks_area_ratio(curve: KsCurve) -> tuple[int, int]:
    c = curve.counts
    nt, nc = c.n_target, c.n_complement
    # y scaled to the integer ct*nc - cc*nt over nt*nc
    bound = 2 * c.n * nt * nc
    if bound < 2**62:
        y = curve.cum_target * nc - curve.cum_complement * nt
    else:
        y = np.array(
            [int(a) * nc - int(b) * nt for a, b in zip(curve.cum_target, curve.cum_complement)],
            dtype=object,
        )
    num = _dot(np.diff(curve.rank), y[1:] + y[:-1], bound)
    return num, bound


def auc_roc(curve: RocCurve, exact: bool = False) -> float | Fraction:
    """Area under the ROC polyline.

    The trapezoid sum is accumulated on the integer counts behind the
    vertices and divided once, so the float result is correctly rounded.
    ``exact=True`` returns the :class:`~fractions.Fraction` instead.
    """
    num, den = _roc_area_ratio(curve)
    return Fraction(num, den) if exact else num / den


def auc_ks(curve: KsCurve, exact: bool = False) -> float | Fraction:
    """Signed area under the KS polyline on [0, 1]; lies in [-0.5, 0.5].

    Computed like :func:`auc_roc`, from integer counts with one division.
    """
    num, den = _ks_area_ratio(curve)
    return Fraction(num, den) if exact else num / den


def gini(auc_roc: float) -> float:
    return 2.0 * auc_roc - 1.0


def _point(curve, values: np.ndarray, scale: float = 1.0) -> PointMetric:
    # argmax returns the first maximum, i.e. the smallest rank
    i = int(np.argmax(values))
    rank = int(curve.rank[i])
    return PointMetric(float(values[i]) / scale, rank, rank / curve.counts.n)


def max_ks2(curve: KsCurve) -> PointMetric:
    """Largest signed CDF difference ``y`` (not ``|y|``)."""
    return _point(curve, curve.y)


def mvd(curve: RocCurve) -> PointMetric:
    """Maximum vertical distance ``v - u`` above the chance diagonal."""
    return _point(curve, curve.v - curve.u)


def max_ks2_projection(curve: RocCurve) -> PointMetric:
    """Maximum perpendicular distance ``(v - u) / sqrt(2)`` to the diagonal."""
    return _point(curve, curve.v - curve.u, scale=SQRT2)


def verify_identity(sample: LabeledSample) -> AreaReport:
    """Build both curves and report the areas and their identity residual.

    The residual is returned, never asserted, so callers decide how to
    surface it.
    """
    roc, ks = build_curves(sample)
    a_roc = auc_roc(roc)
    a_ks = auc_ks(ks)
    return AreaReport(a_roc, a_ks, gini(a_roc), a_roc - 0.5 - a_ks)


def auc_pairwise_oracle(sample: LabeledSample, block: int = 4096) -> float:
    """P(score_target > score_complement) + P(tie)/2 by counting every pair.

    O(n_target * n_complement); blocks over target examples to bound
    memory.  Counts are accumulated as integers, so the only rounding is
    the final division.
    """
    counts = tally_classes(sample)
    pos = sample.scores[sample.labels == 1]
    neg = sample.scores[sample.labels == 0]
    twice_wins = 0
    for start in range(0, pos.size, block):
        chunk = pos[start:start + block, None]
        twice_wins += 2 * int(np.count_nonzero(chunk > neg))
        twice_wins += int(np.count_nonzero(chunk == neg))
    return twice_wins / (2 * counts.n_target * counts.n_complement)
