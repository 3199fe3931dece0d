"""Reordering a variable's monotone KS segments to maximise Max_KS2.

The variable's KS curve (examples ranked by descending value) is cut into
maximal runs of rising, falling, or flat chords.  Moving every rising run to
the front (keeping their relative order), then the flat runs, then every
falling run, makes the curve climb to the sum of all rises before it turns
down, which is the largest peak any reordering of the runs can reach.

The result is a lookup table from original value ranges to new ordinal
positions, so the same recoding can be applied to unseen data.  Values
outside every trained range are clamped to the nearest range.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
from numpy.typing import ArrayLike, NDArray

from kroc.curves import KsCurve, LabeledSample, build_ks
from kroc.metrics import max_ks2

__all__ = [
    "Direction",
    "MappingRecord",
    "MonotoneSegment",
    "SegmentReordering",
    "apply_mapping",
    "find_monotone_segments",
    "remap_sample",
    "reorder_for_max_ks",
]


class Direction(str, Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    FLAT = "flat"


@dataclass(frozen=True)
class MonotoneSegment:
    start_rank: int
    end_rank: int
    direction: Direction
    y_delta: float
    # vertex indices on the source curve; start_vertex < end_vertex
    start_vertex: int
    end_vertex: int


@dataclass(frozen=True)
class MappingRecord:
    value_low: float
    value_high: float
    new_position: int


@dataclass(frozen=True)
class SegmentReordering:
    """Reordered segments and the value-range table realising them.

    ``permutation[j]`` is the index (into ``segments``) of the segment put at
    position ``j``; ``table`` lists ranges in original, descending-value order.
    """

    segments: tuple[MonotoneSegment, ...]
    permutation: tuple[int, ...]
    table: tuple[MappingRecord, ...]
    original_max_ks2: float
    achieved_max_ks2: float


def _chord_signs(curve: KsCurve) -> NDArray[np.int64]:
    # sign of dt/n_target - dc/n_complement, decided on integers
    dt = np.diff(curve.cum_target)
    dc = np.diff(curve.cum_complement)
    return np.sign(dt * curve.counts.n_complement - dc * curve.counts.n_target)


_SIGN_TO_DIRECTION = {1: Direction.INCREASING, -1: Direction.DECREASING, 0: Direction.FLAT}


def find_monotone_segments(curve: KsCurve) -> list[MonotoneSegment]:
    """Split the KS curve into maximal runs of same-direction chords."""
    signs = _chord_signs(curve)
    cuts = np.flatnonzero(signs[1:] != signs[:-1]) + 1
    starts = np.concatenate([[0], cuts])
    ends = np.concatenate([cuts, [signs.size]])
    segments = []
    for a, b in zip(starts, ends):
        a, b = int(a), int(b)
        segments.append(
            MonotoneSegment(
                start_rank=int(curve.rank[a]),
                end_rank=int(curve.rank[b]),
                direction=_SIGN_TO_DIRECTION[int(signs[a])],
                y_delta=float(curve.y[b] - curve.y[a]),
                start_vertex=a,
                end_vertex=b,
            )
        )
    return segments


def _order(segments: list[MonotoneSegment]) -> list[int]:
    rank = {Direction.INCREASING: 0, Direction.FLAT: 1, Direction.DECREASING: 2}
    # sorted() is stable, keeping original order inside each group
    return sorted(range(len(segments)), key=lambda i: rank[segments[i].direction])


def apply_mapping(values: ArrayLike, table) -> NDArray[np.float64]:
    """Recode raw values with a mapping table.

    A value in the range at ``new_position`` k (of m) becomes
    ``m - 1 - k + 0.5 * (value - low) / (high - low)``: higher positions
    rank lower, and order inside a range is preserved.  Values falling
    outside every range take the nearest range and are clamped to it.
    """
    values = np.asarray(values, dtype=np.float64)
    recs = sorted(table, key=lambda r: r.value_low)
    lows = np.array([r.value_low for r in recs])
    highs = np.array([r.value_high for r in recs])
    pos = np.array([r.new_position for r in recs], dtype=np.float64)
    m = len(recs)

    i = np.clip(np.searchsorted(lows, values, side="right") - 1, 0, m - 1)
    # in a gap between ranges i and i+1, move to i+1 when it is closer
    nxt = np.minimum(i + 1, m - 1)
    gap = values > highs[i]
    closer_next = gap & (lows[nxt] - values < values - highs[i])
    i = np.where(closer_next, nxt, i)

    lo, hi = lows[i], highs[i]
    clamped = np.clip(values, lo, hi)
    width = hi - lo
    frac = np.divide(
        clamped - lo, width, out=np.zeros_like(clamped), where=width > 0
    )
    return (m - 1 - pos[i]) + 0.5 * frac


def remap_sample(sample: LabeledSample, table) -> LabeledSample:
    return LabeledSample(apply_mapping(sample.scores, table), sample.labels)


def reorder_for_max_ks(sample: LabeledSample) -> SegmentReordering:
    """Find the segment reordering of ``sample.scores`` that maximises Max_KS2.

    ``achieved_max_ks2`` is measured on the KS curve of the remapped sample.
    """
    curve = build_ks(sample)
    segments = find_monotone_segments(curve)
    perm = _order(segments)
    position = {seg_idx: j for j, seg_idx in enumerate(perm)}

    # curve.threshold[k] is the score of the tie group ending at vertex k
    table = tuple(
        MappingRecord(
            value_low=float(curve.threshold[seg.end_vertex]),
            value_high=float(curve.threshold[seg.start_vertex + 1]),
            new_position=position[i],
        )
        for i, seg in enumerate(segments)
    )
    remapped = build_ks(remap_sample(sample, table))
    return SegmentReordering(
        segments=tuple(segments),
        permutation=tuple(perm),
        table=table,
        original_max_ks2=max_ks2(curve).value,
        achieved_max_ks2=max_ks2(remapped).value,
    )
