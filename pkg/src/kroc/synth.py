"""Deterministic synthetic samples.

All random draws use ``numpy.random.default_rng(seed)`` (the PCG64 bit
generator), so a given seed reproduces the same sample on any platform
running the same NumPy stream version.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from kroc.curves import LabeledSample

__all__ = ["BinormalSpec", "gen_binormal", "gen_ideal", "gen_random", "inject_ties"]


def _check_sizes(n: int, n_target: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 1 <= n_target <= n - 1:
        raise ValueError(f"n_target must lie in [1, {n - 1}], got {n_target}")


@dataclass(frozen=True)
class BinormalSpec:
    """Targets ~ N(separation, 1), complements ~ N(0, 1).

    The class sizes are fixed at ``round(n * prevalence)`` targets (clamped
    so both classes are present) rather than drawn.
    """

    n: int
    prevalence: float
    separation: float
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 < self.prevalence < 1.0:
            raise ValueError(f"prevalence must lie in (0, 1), got {self.prevalence}")
        if self.separation < 0:
            raise ValueError(f"separation must be >= 0, got {self.separation}")
        _check_sizes(self.n, 1)

    @property
    def n_target(self) -> int:
        return min(max(round(self.n * self.prevalence), 1), self.n - 1)


def gen_ideal(n: int, n_target: int) -> LabeledSample:
    """Perfect separation: every target outscores every complement."""
    _check_sizes(n, n_target)
    labels = np.zeros(n, dtype=np.int8)
    labels[:n_target] = 1
    return LabeledSample.from_ranked_labels(labels)


def gen_random(n: int, n_target: int, seed: int = 0) -> LabeledSample:
    """Uninformative classifier: labels in uniformly random rank order."""
    _check_sizes(n, n_target)
    rng = np.random.default_rng(seed)
    labels = np.zeros(n, dtype=np.int8)
    labels[:n_target] = 1
    rng.shuffle(labels)
    return LabeledSample.from_ranked_labels(labels)


def gen_binormal(spec: BinormalSpec) -> LabeledSample:
    rng = np.random.default_rng(spec.seed)
    nt = spec.n_target
    scores = np.concatenate(
        [rng.normal(spec.separation, 1.0, nt), rng.normal(0.0, 1.0, spec.n - nt)]
    )
    labels = np.zeros(spec.n, dtype=np.int8)
    labels[:nt] = 1
    return LabeledSample(scores, labels)


def inject_ties(sample: LabeledSample, levels: int, seed: int = 0) -> LabeledSample:
    """Coarsen scores onto ``levels`` values by rank, creating tie groups.

    A rank-based bucketing, so the result keeps the original score order
    (up to the new ties).  A small random jitter of bucket edges keeps group
    sizes uneven.
    """
    if levels < 1:
        raise ValueError(f"levels must be >= 1, got {levels}")
    rng = np.random.default_rng(seed)
    n = len(sample)
    order = np.argsort(sample.scores, kind="stable")
    edges = np.sort(rng.integers(0, n + 1, size=levels - 1))
    bucket = np.searchsorted(edges, np.arange(n), side="right")
    coarse = np.empty(n, dtype=np.float64)
    coarse[order] = bucket
    return LabeledSample(coarse, sample.labels)
