"""Input standardization (zero mean, identity covariance) and pullback of directions."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, InsufficientSamplesError, InvalidInputError
from .linalg import inv_sqrt


@dataclass(frozen=True)
class Dataset:
    """Predictors ``X`` (N x m, one sample per row) paired with responses ``y``."""

    X: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        X = np.asarray(self.X, dtype=float)
        y = np.asarray(self.y, dtype=float)
        if X.ndim == 1:
            X = X[:, None]
        if X.ndim != 2 or y.ndim != 1:
            raise InvalidInputError("X must be N x m and y length N")
        if X.shape[0] != y.shape[0]:
            raise DimensionMismatchError(f"X has {X.shape[0]} rows but y has {y.shape[0]} entries")
        if X.shape[0] < 1 or X.shape[1] < 1:
            raise InvalidInputError(f"empty dataset (shape {X.shape})")
        if not (np.all(np.isfinite(X)) and np.all(np.isfinite(y))):
            raise InvalidInputError("dataset has non-finite entries")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "y", y)

    @property
    def N(self) -> int:
        return self.X.shape[0]

    @property
    def m(self) -> int:
        return self.X.shape[1]

    def take(self, idx) -> "Dataset":
        return Dataset(self.X[idx], self.y[idx])


@dataclass(frozen=True)
class Standardizer:
    mean: np.ndarray
    cov: np.ndarray
    whitener: np.ndarray

    @property
    def m(self) -> int:
        return self.mean.shape[0]


def fit(data: Dataset) -> Standardizer:
    if data.N <= data.m:
        raise InsufficientSamplesError(
            f"need more samples than input dimensions to standardize (N={data.N}, m={data.m})"
        )
    mean = data.X.mean(axis=0)
    Xc = data.X - mean
    cov = Xc.T @ Xc / (data.N - 1)
    cov = 0.5 * (cov + cov.T)
    return Standardizer(mean=mean, cov=cov, whitener=inv_sqrt(cov))


def transform(s: Standardizer, X) -> np.ndarray:
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[None, :]
    if X.shape[1] != s.m:
        raise DimensionMismatchError(f"standardizer fitted on m={s.m}, data has m={X.shape[1]}")
    # whitener is symmetric, so row-wise W (x - mean) is (X - mean) @ W
    return (X - s.mean) @ s.whitener


def apply(s: Standardizer, data: Dataset) -> Dataset:
    return Dataset(transform(s, data.X), data.y)


def pullback(s: Standardizer, W) -> np.ndarray:
    """Map standardized-coordinate directions to unit directions in original coordinates.

    A function of ``w^T z`` with ``z = whitener (x - mean)`` is a function of
    ``(whitener w)^T x``, so each column becomes ``whitener w`` renormalized.
    Columns are not re-orthogonalized; use ``linalg.orthonormalize`` for a basis.
    """
    W = np.asarray(W, dtype=float)
    if W.ndim == 1:
        W = W[:, None]
    if W.shape[0] != s.m:
        raise DimensionMismatchError(f"directions have {W.shape[0]} rows, expected {s.m}")
    D = s.whitener @ W
    return D / np.linalg.norm(D, axis=0)
