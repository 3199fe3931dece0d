"""Tie-aware empirical ROC and KS curves.

Examples are ranked by descending score, so a high score means "predicted
target".  Examples sharing a score form one tie group: no threshold can
split them, so each group contributes a single chord to both curves.

Coordinates are emitted from exact integer counts with one division each,
which makes ``ks.y == roc.v - roc.u`` hold bitwise at every vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from kroc.errors import EmptySample, InvalidLabel, NonFiniteScore, SingleClassSample

__all__ = [
    "ClassCounts",
    "KsCurve",
    "LabeledSample",
    "RocCurve",
    "TieGroup",
    "build_curves",
    "build_ks",
    "build_roc",
    "rank_and_group",
    "tally_classes",
]


@dataclass(frozen=True)
class LabeledSample:
    """Scored examples with binary labels (1 = target, 0 = complement).

    Only the label encoding and shapes are checked on construction; the
    count and finiteness rules are enforced by :func:`tally_classes`, so a
    degenerate sample can still be built and reported on.
    """

    scores: NDArray[np.float64]
    labels: NDArray[np.int8]

    def __post_init__(self) -> None:
        scores = np.asarray(self.scores, dtype=np.float64).reshape(-1)
        raw = np.asarray(self.labels).reshape(-1)
        if scores.shape != raw.shape:
            raise ValueError(
                f"scores and labels differ in length: {scores.size} vs {raw.size}"
            )
        bad = (raw != 0) & (raw != 1)
        if bad.any():
            raise InvalidLabel(
                f"labels must be 0 or 1, got {raw[bad][0]!r} at index {int(np.argmax(bad))}"
            )
        scores.setflags(write=False)
        labels = raw.astype(np.int8)
        labels.setflags(write=False)
        object.__setattr__(self, "scores", scores)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_pairs(cls, pairs) -> "LabeledSample":
        """Build from an iterable of ``(score, label)`` pairs."""
        pairs = list(pairs)
        if not pairs:
            return cls(np.empty(0), np.empty(0, dtype=np.int8))
        scores, labels = zip(*pairs)
        return cls(np.array(scores, dtype=np.float64), np.array(labels))

    @classmethod
    def from_ranked_labels(cls, labels: ArrayLike) -> "LabeledSample":
        """Sample whose labels are given in descending-score order.

        Scores ``n, n-1, ..., 1`` are assigned, so all are distinct.
        """
        labels = np.asarray(labels)
        n = labels.size
        return cls(np.arange(n, 0, -1, dtype=np.float64), labels)

    def __len__(self) -> int:
        return int(self.scores.size)


@dataclass(frozen=True)
class ClassCounts:
    n: int
    n_target: int
    n_complement: int

    def __post_init__(self) -> None:
        if self.n != self.n_target + self.n_complement:
            raise ValueError(
                f"n={self.n} != n_target + n_complement "
                f"= {self.n_target} + {self.n_complement}"
            )

    @property
    def prevalence(self) -> float:
        """Target fraction ``n_target / n``."""
        return self.n_target / self.n

    def __add__(self, other: "ClassCounts") -> "ClassCounts":
        return ClassCounts(
            self.n + other.n,
            self.n_target + other.n_target,
            self.n_complement + other.n_complement,
        )


@dataclass(frozen=True)
class TieGroup:
    score: float
    count_target: int
    count_complement: int
    cum_target: int
    cum_complement: int


@dataclass(frozen=True)
class _Groups:
    """Column-oriented tie groups; the fast path behind the public list form."""

    scores: NDArray[np.float64]
    cum_target: NDArray[np.int64]
    cum_complement: NDArray[np.int64]


@dataclass(frozen=True, kw_only=True)
class _Curve:
    counts: ClassCounts
    rank: NDArray[np.int64]
    cum_target: NDArray[np.int64]
    cum_complement: NDArray[np.int64]
    # score of the tie group ending at each vertex; NaN at the origin
    threshold: NDArray[np.float64]

    def __len__(self) -> int:
        return int(self.rank.size)


@dataclass(frozen=True, kw_only=True)
class RocCurve(_Curve):
    """Polyline of (false-positive rate ``u``, true-positive rate ``v``)."""

    u: NDArray[np.float64]
    v: NDArray[np.float64]

    @property
    def vertices(self) -> NDArray[np.float64]:
        """``(k, 3)`` array of ``(u, v, rank)`` rows."""
        return np.column_stack([self.u, self.v, self.rank])


@dataclass(frozen=True, kw_only=True)
class KsCurve(_Curve):
    """Polyline of (population fraction ``x``, CDF difference ``y``)."""

    x: NDArray[np.float64]
    y: NDArray[np.float64]

    @property
    def vertices(self) -> NDArray[np.float64]:
        """``(k, 3)`` array of ``(x, y, rank)`` rows."""
        return np.column_stack([self.x, self.y, self.rank])


def _check_finite(sample: LabeledSample) -> None:
    finite = np.isfinite(sample.scores)
    if not finite.all():
        i = int(np.argmin(finite))
        raise NonFiniteScore(f"score at index {i} is {sample.scores[i]!r}")


def tally_classes(sample: LabeledSample) -> ClassCounts:
    """Count both classes, rejecting samples on which rates are undefined."""
    n = len(sample)
    if n < 2:
        raise EmptySample(f"need at least 2 entries, got {n}")
    _check_finite(sample)
    n_target = int(np.count_nonzero(sample.labels))
    n_complement = n - n_target
    if n_target == 0 or n_complement == 0:
        raise SingleClassSample(n_target, n_complement)
    return ClassCounts(n, n_target, n_complement)


def _group(sample: LabeledSample) -> _Groups:
    _check_finite(sample)
    order = np.argsort(-sample.scores, kind="stable")
    s = sample.scores[order]
    lab = sample.labels[order].astype(np.int64)
    # last index of each run of equal scores
    ends = np.flatnonzero(np.append(s[1:] != s[:-1], True))
    cum_t = np.cumsum(lab)[ends]
    cum_c = (ends + 1) - cum_t
    return _Groups(s[ends], cum_t, cum_c)


def rank_and_group(sample: LabeledSample) -> list[TieGroup]:
    """Tie groups in strictly descending score order with cumulative counts."""
    g = _group(sample)
    prev_t = np.concatenate([[0], g.cum_target[:-1]])
    prev_c = np.concatenate([[0], g.cum_complement[:-1]])
    return [
        TieGroup(float(s), int(ct - pt), int(cc - pc), int(ct), int(cc))
        for s, ct, cc, pt, pc in zip(
            g.scores, g.cum_target, g.cum_complement, prev_t, prev_c
        )
    ]


def _vertex_columns(sample: LabeledSample):
    counts = tally_classes(sample)
    g = _group(sample)
    cum_t = np.concatenate([[0], g.cum_target])
    cum_c = np.concatenate([[0], g.cum_complement])
    threshold = np.concatenate([[np.nan], g.scores])
    return counts, cum_t, cum_c, cum_t + cum_c, threshold


def _roc(counts, cum_t, cum_c, rank, threshold) -> RocCurve:
    return RocCurve(
        counts=counts,
        rank=rank,
        cum_target=cum_t,
        cum_complement=cum_c,
        threshold=threshold,
        u=cum_c / counts.n_complement,
        v=cum_t / counts.n_target,
    )


def _ks(counts, cum_t, cum_c, rank, threshold) -> KsCurve:
    return KsCurve(
        counts=counts,
        rank=rank,
        cum_target=cum_t,
        cum_complement=cum_c,
        threshold=threshold,
        x=rank / counts.n,
        y=cum_t / counts.n_target - cum_c / counts.n_complement,
    )


def build_roc(sample: LabeledSample) -> RocCurve:
    """Empirical ROC curve: one vertex per tie group plus the origin."""
    return _roc(*_vertex_columns(sample))


def build_ks(sample: LabeledSample) -> KsCurve:
    """Empirical KS curve: one vertex per tie group plus the origin."""
    return _ks(*_vertex_columns(sample))


def build_curves(sample: LabeledSample) -> tuple[RocCurve, KsCurve]:
    """Both curves from a single sort of the sample."""
    cols = _vertex_columns(sample)
    return _roc(*cols), _ks(*cols)
