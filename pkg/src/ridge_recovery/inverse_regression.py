"""Sliced inverse regression (SIR) and sliced average variance estimation (SAVE).

All matrices are assembled from standardized predictors. Slices are
visited in index order so the assembled matrices are bit-reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import standardize
from .errors import DimensionMismatchError, InvalidInputError, SliceTooSmallError
from .linalg import EigenDecomposition, sym_eig
from .slicing import SlicePartition, SlicingStrategy, default_strategy, partition
from .standardize import Dataset, Standardizer

SIR = "sir"
SAVE = "save"
METHODS = (SIR, SAVE)


@dataclass(frozen=True)
class MomentMatrixEstimate:
    method: str
    matrix: np.ndarray
    eig: EigenDecomposition
    counts: np.ndarray
    N: int

    @property
    def R(self) -> int:
        return self.counts.shape[0]

    @property
    def m(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class SubspaceEstimate:
    basis: np.ndarray
    source: str

    @property
    def n(self) -> int:
        return self.basis.shape[1]


def _check(Z: Dataset, p: SlicePartition) -> None:
    if p.N != Z.N:
        raise DimensionMismatchError(f"partition covers {p.N} samples, dataset has {Z.N}")


def slice_means(Z: Dataset, p: SlicePartition) -> np.ndarray:
    """R x m table whose row r is the mean of the standardized inputs in slice r."""
    _check(Z, p)
    return np.stack([Z.X[idx].mean(axis=0) for idx in p.membership])


def slice_covariances(Z: Dataset, p: SlicePartition) -> np.ndarray:
    """R x m x m stack of within-slice sample covariances (1/(N_r - 1) normalization)."""
    _check(Z, p)
    if p.min_count < 2:
        raise SliceTooSmallError(
            "a slice holds a single sample, so its covariance is undefined; "
            "re-partition with fewer slices or min_count=2"
        )
    covs = []
    for idx in p.membership:
        Zr = Z.X[idx]
        Zc = Zr - Zr.mean(axis=0)
        S = Zc.T @ Zc / (idx.shape[0] - 1)
        covs.append(0.5 * (S + S.T))
    return np.stack(covs)


def _estimate(method: str, C: np.ndarray, p: SlicePartition, N: int) -> MomentMatrixEstimate:
    C = 0.5 * (C + C.T)
    return MomentMatrixEstimate(method=method, matrix=C, eig=sym_eig(C), counts=p.counts.copy(), N=N)


def sir_matrix(Z: Dataset, p: SlicePartition) -> MomentMatrixEstimate:
    mu = slice_means(Z, p)
    w = p.counts / Z.N
    C = np.zeros((Z.m, Z.m))
    for r in range(p.R):
        C += w[r] * np.outer(mu[r], mu[r])
    return _estimate(SIR, C, p, Z.N)


def save_matrix(Z: Dataset, p: SlicePartition) -> MomentMatrixEstimate:
    covs = slice_covariances(Z, p)
    w = p.counts / Z.N
    eye = np.eye(Z.m)
    C = np.zeros((Z.m, Z.m))
    for r in range(p.R):
        D = eye - covs[r]
        C += w[r] * (D @ D)
    return _estimate(SAVE, C, p, Z.N)


def moment_matrix(method: str, Z: Dataset, p: SlicePartition) -> MomentMatrixEstimate:
    if method == SIR:
        return sir_matrix(Z, p)
    if method == SAVE:
        return save_matrix(Z, p)
    raise InvalidInputError(f"unknown method {method!r}; expected one of {METHODS}")


def estimate_subspace(est: MomentMatrixEstimate, n: int) -> SubspaceEstimate:
    if not 1 <= n <= est.m:
        raise InvalidInputError(f"subspace dimension must be in 1..{est.m}, got {n}")
    return SubspaceEstimate(basis=est.eig.vectors[:, :n].copy(), source=est.method)


@dataclass(frozen=True)
class Fit:
    standardizer: Standardizer
    partition: SlicePartition
    estimate: MomentMatrixEstimate
    Z: Dataset


def fit(data: Dataset, method: str, strategy: SlicingStrategy | None = None) -> Fit:
    """Standardize, slice and assemble the moment matrix for raw ``data``.

    SAVE needs at least two samples per slice, so its partition merges
    singleton slices instead of dropping them.
    """
    if method not in METHODS:
        raise InvalidInputError(f"unknown method {method!r}; expected one of {METHODS}")
    if strategy is None:
        strategy = default_strategy(data.N, data.m)
    s = standardize.fit(data)
    Z = standardize.apply(s, data)
    p = partition(Z.y, strategy, min_count=2 if method == SAVE else 1)
    return Fit(standardizer=s, partition=p, estimate=moment_matrix(method, Z, p), Z=Z)
