"""The linear map between KS coordinates (x, y) and ROC coordinates (u, v).

With target prevalence ``p = n_target / n``::

    [u]   [1   -p ] [x]
    [v] = [1  1-p ] [y]

It sends the KS endpoint (1, 0) to (1, 1), the apex (p, 1) of the ideal KS
triangle to the ROC corner (0, 1), and the KS baseline ``y = 0`` onto the
chance diagonal ``u = v``.  Its determinant is 1, so areas are preserved;
it is not orthogonal, so lengths and angles are not.

Factorisation
-------------
``T = R(pi/4) @ S(sqrt 2, 1/sqrt 2) @ H(1/2 - p)`` where ``H(k)`` is the
x-shear ``[[1, k], [0, 1]]``.  Read as a product written left to right, so a
point is sheared first, then scaled, then rotated.  No other ordering of
these three factors reproduces ``T``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from kroc.curves import ClassCounts
from kroc.errors import DegeneratePrevalence

__all__ = [
    "KsRocTransform",
    "TransformDecomposition",
    "apply_to_point",
    "decompose",
    "determinant",
    "invert_point",
    "make_transform",
    "rotation",
    "scaling",
    "shear_x",
]


@dataclass(frozen=True)
class KsRocTransform:
    """KS -> ROC map parameterised by target prevalence ``p`` in (0, 1)."""

    prevalence: float

    def __post_init__(self) -> None:
        p = self.prevalence
        if not (0.0 < p < 1.0):
            raise DegeneratePrevalence(f"prevalence must lie in (0, 1), got {p!r}")

    @property
    def matrix(self) -> NDArray[np.float64]:
        p = self.prevalence
        return np.array([[1.0, -p], [1.0, 1.0 - p]])

    @property
    def inverse_matrix(self) -> NDArray[np.float64]:
        p = self.prevalence
        return np.array([[1.0 - p, p], [-1.0, 1.0]])


@dataclass(frozen=True)
class TransformDecomposition:
    rotation_angle: float
    scale_x: float
    scale_y: float
    shear_factor: float

    def product(self) -> NDArray[np.float64]:
        """Recompose ``R @ S @ H``."""
        return (
            rotation(self.rotation_angle)
            @ scaling(self.scale_x, self.scale_y)
            @ shear_x(self.shear_factor)
        )


def make_transform(counts: ClassCounts) -> KsRocTransform:
    if counts.n_target <= 0 or counts.n_complement <= 0:
        raise DegeneratePrevalence(
            f"both classes are needed, got n_target={counts.n_target}, "
            f"n_complement={counts.n_complement}"
        )
    return KsRocTransform(counts.n_target / counts.n)


def apply_to_point(t: KsRocTransform, ks_point: ArrayLike) -> tuple:
    """Map KS coordinates to ROC coordinates.

    ``ks_point`` is an ``(x, y)`` pair whose members may be scalars or
    equally shaped arrays.
    """
    x, y = ks_point
    p = t.prevalence
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    u = x - p * y
    v = x + (1.0 - p) * y
    if u.ndim == 0:
        return float(u), float(v)
    return u, v


def invert_point(t: KsRocTransform, roc_point: ArrayLike) -> tuple:
    """Map ROC coordinates back to KS coordinates."""
    u, v = roc_point
    p = t.prevalence
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    x = (1.0 - p) * u + p * v
    y = v - u
    if x.ndim == 0:
        return float(x), float(y)
    return x, y


def determinant(t: KsRocTransform) -> float:
    (a, b), (c, d) = t.matrix
    return float(a * d - b * c)


def rotation(angle: float) -> NDArray[np.float64]:
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s], [s, c]])


def scaling(sx: float, sy: float) -> NDArray[np.float64]:
    return np.array([[sx, 0.0], [0.0, sy]])


def shear_x(k: float) -> NDArray[np.float64]:
    return np.array([[1.0, k], [0.0, 1.0]])


def decompose(t: KsRocTransform) -> TransformDecomposition:
    return TransformDecomposition(
        rotation_angle=math.pi / 4,
        scale_x=math.sqrt(2.0),
        scale_y=1.0 / math.sqrt(2.0),
        shear_factor=0.5 - t.prevalence,
    )
