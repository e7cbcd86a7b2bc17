"""Partition the observed response range into slices.

Slice indices are 0-based throughout: slice ``r`` covers
``[edges[r], edges[r + 1]]`` and a response lying exactly on an interior
edge belongs to the lower slice.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError

EQUAL_COUNT = "equal-count"
EQUAL_WIDTH = "equal-width"
KINDS = (EQUAL_COUNT, EQUAL_WIDTH)


@dataclass(frozen=True)
class SlicingStrategy:
    kind: str = EQUAL_COUNT
    requested_R: int = 10

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInputError(f"unknown slicing kind {self.kind!r}; expected one of {KINDS}")
        if int(self.requested_R) != self.requested_R or self.requested_R < 1:
            raise InvalidInputError(f"requested_R must be a positive integer, got {self.requested_R}")


def default_slice_count(N: int, m: int) -> int:
    return max(1, min(20, max(2, N // max(2 * m, 10)), N))


def default_strategy(N: int, m: int, kind: str = EQUAL_COUNT) -> SlicingStrategy:
    return SlicingStrategy(kind, default_slice_count(N, m))


@dataclass(frozen=True)
class SlicePartition:
    edges: np.ndarray
    labels: np.ndarray
    counts: np.ndarray
    degenerate: bool = False
    warnings: tuple = field(default=())

    @property
    def R(self) -> int:
        return self.counts.shape[0]

    @property
    def N(self) -> int:
        return self.labels.shape[0]

    @property
    def membership(self) -> list[np.ndarray]:
        order = np.argsort(self.labels, kind="stable")
        return np.split(order, np.cumsum(self.counts)[:-1])

    @property
    def min_count(self) -> int:
        return int(self.counts.min())


def _labels_from_edges(edges: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.searchsorted(edges[1:-1], y, side="left")


def _equal_count_bounds(ys: np.ndarray, R: int) -> list[int]:
    N = ys.shape[0]
    sizes = np.full(R, N // R)
    sizes[: N % R] += 1
    bounds = [0]
    for b in np.cumsum(sizes)[:-1]:
        if ys[b - 1] == ys[b]:
            # keep the tie run together in the lower slice
            b = int(np.searchsorted(ys, ys[b - 1], side="right"))
        if bounds[-1] < b < N:
            bounds.append(int(b))
    bounds.append(N)
    return bounds


def _merge_small(edges: np.ndarray, labels: np.ndarray, min_count: int):
    """Merge slices with fewer than ``min_count`` members into a neighbor, lower first."""
    edges = list(edges)
    counts = list(np.bincount(labels, minlength=len(edges) - 1))
    mapping = np.arange(len(counts))
    while len(counts) > 1:
        small = [r for r, c in enumerate(counts) if c < min_count]
        if not small:
            break
        r = small[0]
        target = r - 1 if r > 0 else r + 1
        lo = min(r, target)
        counts[lo] += counts[lo + 1]
        del counts[lo + 1]
        del edges[lo + 1]
        mapping = np.where(mapping > lo, mapping - 1, mapping)
    return np.asarray(edges), mapping[labels], np.asarray(counts, dtype=int)


def partition(y, strategy: SlicingStrategy, min_count: int = 1) -> SlicePartition:
    """Slice the responses ``y`` according to ``strategy``.

    Empty slices, and slices with fewer than ``min_count`` members, are
    merged into a neighbor, so the achieved R can be below ``requested_R``.
    """
    y = np.asarray(y, dtype=float)
    if y.ndim != 1 or y.shape[0] < 1:
        raise InvalidInputError("responses must be a nonempty vector")
    if not np.all(np.isfinite(y)):
        raise InvalidInputError("responses have non-finite entries")
    N = y.shape[0]
    R = int(strategy.requested_R)
    if R > N:
        raise InvalidInputError(f"requested {R} slices for only {N} samples")

    lo, hi = float(y.min()), float(y.max())
    if lo == hi:
        return SlicePartition(
            edges=np.array([lo, hi]),
            labels=np.zeros(N, dtype=int),
            counts=np.array([N]),
            degenerate=True,
            warnings=("degenerate response range: all responses equal, using a single slice",),
        )

    if strategy.kind == EQUAL_WIDTH:
        edges = np.linspace(lo, hi, R + 1)
        edges[0], edges[-1] = lo, hi
    else:
        ys = np.sort(y, kind="stable")
        bounds = _equal_count_bounds(ys, R)
        edges = np.array([lo] + [ys[b - 1] for b in bounds[1:-1]] + [hi])
    labels = _labels_from_edges(edges, y)
    edges, labels, counts = _merge_small(edges, labels, max(1, min_count))
    return SlicePartition(edges=edges, labels=labels, counts=counts)


def assign(p: SlicePartition, y_value) -> int | np.ndarray:
    """Slice index of ``y_value`` (scalar or array); out-of-range values clamp to the end slices."""
    out = _labels_from_edges(p.edges, np.asarray(y_value, dtype=float))
    return int(out) if np.ndim(out) == 0 else out
