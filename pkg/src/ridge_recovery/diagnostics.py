"""Bootstrap eigenvalue ranges, dimension suggestion, summary-plot coordinates and
the Monte Carlo convergence harness."""
from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import inverse_regression as ir
from . import standardize
from .errors import DimensionMismatchError, InvalidInputError
from .linalg import EigenDecomposition, subspace_distance
from .slicing import SlicingStrategy, default_strategy
from .standardize import Dataset, Standardizer
from .testbed import TestFunction, sample_inputs

DEFAULT_B = 200
DEFAULT_PERCENTILES = (2.5, 97.5)

# stream keys: the reference run and the grid trials never share a seed
_REFERENCE_STREAM = 0
_TRIAL_STREAM = 1


def _map(func, items, workers: int):
    if workers <= 1:
        return [func(i) for i in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


@dataclass(frozen=True)
class BootstrapRanges:
    B: int
    percentiles: tuple
    lo: np.ndarray
    hi: np.ndarray
    point: np.ndarray
    samples: np.ndarray  # B x m resampled eigenvalues


def bootstrap_eigs(
    data: Dataset,
    method: str,
    strategy: SlicingStrategy | None = None,
    B: int = DEFAULT_B,
    percentiles=DEFAULT_PERCENTILES,
    seed: int = 0,
    workers: int = 1,
) -> BootstrapRanges:
    """Percentile ranges of the eigenvalues over ``B`` row resamples.

    Every resample reruns standardization, slicing and assembly. Resample
    ``b`` draws from its own stream keyed by ``(seed, b)``, so the result does
    not depend on ``workers``.
    """
    if B < 1:
        raise InvalidInputError("bootstrap needs at least one resample")
    lo_p, hi_p = (float(q) for q in percentiles)
    if not 0 <= lo_p <= hi_p <= 100:
        raise InvalidInputError(f"invalid percentiles {percentiles}")
    if strategy is None:
        strategy = default_strategy(data.N, data.m)
    point = ir.fit(data, method, strategy).estimate.eig.values

    def one(b):
        idx = np.random.default_rng([seed, b]).integers(0, data.N, size=data.N)
        return ir.fit(data.take(idx), method, strategy).estimate.eig.values

    samples = np.stack(_map(one, range(B), workers))
    lo, hi = np.percentile(samples, [lo_p, hi_p], axis=0)
    return BootstrapRanges(B=B, percentiles=(lo_p, hi_p), lo=lo, hi=hi, point=point, samples=samples)


def suggest_dimension(eig: EigenDecomposition | np.ndarray) -> int:
    """Index n (1-based) of the largest gap lambda_n - lambda_{n+1}; smallest n on ties."""
    values = np.asarray(eig.values if isinstance(eig, EigenDecomposition) else eig, dtype=float)
    if values.shape[0] < 2:
        raise InvalidInputError("need at least two eigenvalues to compare gaps")
    return int(np.argmax(values[:-1] - values[1:])) + 1


def summary_coordinates(data: Dataset, s: Standardizer, sub: ir.SubspaceEstimate) -> np.ndarray:
    """Rows ``(w_1^T z_i, ..., w_n^T z_i, y_i)`` for sufficient summary plots."""
    if sub.basis.shape[0] != data.m:
        raise DimensionMismatchError(f"basis has {sub.basis.shape[0]} rows, data has m={data.m}")
    if sub.n > 2:
        warnings.warn(f"summary plots with n={sub.n} > 2 coordinates are hard to read", stacklevel=2)
    Z = standardize.transform(s, data.X)
    return np.column_stack([Z @ sub.basis, data.y])


@dataclass(frozen=True)
class ConvergenceReport:
    function: str
    method: str
    n: int
    grid: np.ndarray
    trials: int
    reference_N: int
    seed: int
    reference_eigenvalues: np.ndarray
    eig_err: np.ndarray  # G x T
    sub_err: np.ndarray  # G x T
    eig_slope: float | None
    sub_slope: float | None

    @property
    def slopes_defined(self) -> bool:
        return self.eig_slope is not None and self.sub_slope is not None


def loglog_slope(N, err) -> float | None:
    """Least-squares slope of log(err) against log(N); None when undefined."""
    N = np.asarray(N, dtype=float)
    err = np.asarray(err, dtype=float)
    if np.unique(N).size < 2 or np.any(err <= 0):
        return None
    return float(np.polyfit(np.log(N), np.log(err), 1)[0])


def convergence_study(
    fn: TestFunction,
    grid,
    trials: int,
    n: int,
    method: str,
    strategy: SlicingStrategy | None = None,
    reference_N: int = 10**6,
    seed: int = 0,
    workers: int = 1,
) -> ConvergenceReport:
    """Eigenvalue and subspace errors against a single large-N reference run.

    ``strategy=None`` applies the default slice count at each sample size.
    Eigenvalue error is ``max_k (lam_k - lam_k_ref)^2 / lam_1_ref^2``; subspace
    error is the distance between the leading-``n`` eigenvector spans.
    """
    grid = np.asarray(grid, dtype=int)
    if grid.ndim != 1 or grid.size < 1:
        raise InvalidInputError("grid must be a nonempty list of sample sizes")
    steps = np.diff(grid)
    # a constant grid is allowed; its slopes are reported as undefined
    if grid.min() < 2 or not (np.all(steps > 0) or np.all(steps == 0)):
        raise InvalidInputError("grid must be increasing sample sizes >= 2")
    if trials < 1:
        raise InvalidInputError("trials must be positive")
    if reference_N < 10 * grid.max():
        raise InvalidInputError(f"reference_N={reference_N} must be at least 10x the largest grid size")
    if not 1 <= n <= fn.m:
        raise InvalidInputError(f"n must be in 1..{fn.m}")

    def run(N, key):
        data = sample_inputs(fn, int(N), key)
        return ir.fit(data, method, strategy).estimate

    ref = run(reference_N, [seed, _REFERENCE_STREAM])
    ref_basis = ref.eig.vectors[:, :n]
    lam1 = ref.eig.values[0]

    def one(task):
        g, t = task
        est = run(grid[g], [seed, _TRIAL_STREAM, g, t])
        e = np.max((est.eig.values - ref.eig.values) ** 2) / lam1**2
        return e, subspace_distance(est.eig.vectors[:, :n], ref_basis)

    tasks = [(g, t) for g in range(grid.size) for t in range(trials)]
    out = np.array(_map(one, tasks, workers)).reshape(grid.size, trials, 2)
    eig_err, sub_err = out[..., 0], out[..., 1]
    return ConvergenceReport(
        function=fn.name,
        method=method,
        n=n,
        grid=grid,
        trials=trials,
        reference_N=int(reference_N),
        seed=seed,
        reference_eigenvalues=ref.eig.values,
        eig_err=eig_err,
        sub_err=sub_err,
        eig_slope=loglog_slope(grid, eig_err.mean(axis=1)),
        sub_slope=loglog_slope(grid, sub_err.mean(axis=1)),
    )
