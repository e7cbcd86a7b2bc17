"""Test functions with known central subspaces, their input samplers and oracles."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import bisect

from .errors import DimensionMismatchError, InvalidInputError
from .linalg import orthonormalize
from .standardize import Dataset

NAMES = ("quad1d", "quad3d", "product", "shifted_product", "bullseye", "linear", "hartmann_log")

# Fixed seed for the default quad1d/quad3d/linear parameters, so golden numbers are stable.
PARAM_SEED = 20180611

HARTMANN_MEAN = np.array([-2.25, 1.0, 0.3, 0.3, -0.75])
HARTMANN_COV = np.diag([0.15, 0.25, 0.25, 0.25, 0.25])
# log-input order: viscosity, density, pressure gradient, resistivity, applied field
HARTMANN_INPUTS = ("mu", "rho", "dp0_dx", "eta", "B0")

BULLSEYE_LOW, BULLSEYE_HIGH = 0.0, 1.0


@dataclass(frozen=True)
class TestFunction:
    __test__ = False  # not a pytest class

    name: str
    m: int
    params: dict = field(default_factory=dict)
    mean: np.ndarray | None = None  # None means standard Gaussian inputs
    cov: np.ndarray | None = None

    @property
    def input_density(self) -> str:
        return "std_gaussian" if self.mean is None else "gaussian"


@dataclass(frozen=True)
class OracleSubspace:
    basis: np.ndarray | None
    note: str  # exact | asserted | none


def _g(r):
    return r**2 * np.exp(-(r**2) / 2)


def bullseye_radii() -> tuple[float, float]:
    """Radii ``r1 = 1 < r2`` with ``r1^2 exp(-r1^2/2) = r2^2 exp(-r2^2/2)``.

    For this pair both conditional covariances of the bullseye equal the
    identity, so its population SAVE matrix vanishes.
    """
    r1 = 1.0
    target = _g(r1)
    # g increases on (0, sqrt 2) and decreases after, toward 0
    r2 = bisect(lambda r: _g(r) - target, np.sqrt(2.0), 10.0, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    return r1, float(r2)


def _default_unit(m: int, offset: int) -> np.ndarray:
    v = np.random.default_rng([PARAM_SEED, offset]).standard_normal(m)
    return v / np.linalg.norm(v)


def _default_quad3d():
    """B and b expressed in a seeded random orthonormal frame q1, q2, q3 of R^10.

    B = [q1, sqrt(0.3) q2] and b = 0.5 (q1 + q2 + q3). The linear part has
    components inside colspan(B); without them the response is symmetric in
    B^T x and the SIR matrix loses both quadratic directions.
    """
    frame, _ = np.linalg.qr(np.random.default_rng([PARAM_SEED, 3]).standard_normal((10, 3)))
    B = frame[:, :2] * np.sqrt([1.0, 0.3])
    b = frame @ np.array([0.5, 0.5, 0.5])
    return B, b


def make_function(name: str, **params) -> TestFunction:
    """Build a named test function; ``params`` override the defaults."""
    if name not in NAMES:
        raise InvalidInputError(f"unknown test function {name!r}; expected one of {NAMES}")
    if name == "quad1d":
        b = np.asarray(params.get("b", _default_unit(10, 1)), dtype=float).ravel()
        if not np.any(b):
            raise InvalidInputError("quad1d needs a nonzero b")
        return TestFunction(name, b.size, {"b": b})
    if name == "quad3d":
        B0, b0 = _default_quad3d()
        b = np.asarray(params.get("b", b0), dtype=float).ravel()
        B = np.asarray(params.get("B", B0), dtype=float).reshape(b.size, -1)
        if B.shape[1] != 2 or np.linalg.matrix_rank(B) != 2:
            raise InvalidInputError("quad3d needs B with two independent columns")
        if np.linalg.matrix_rank(np.column_stack([B, b])) != 3:
            raise InvalidInputError("quad3d needs b outside colspan(B)")
        return TestFunction(name, b.size, {"B": B, "b": b})
    if name == "product":
        return TestFunction(name, 2)
    if name == "shifted_product":
        # |c1| != |c2| by default: c1 = +-c2 keeps a coordinate-swap symmetry that
        # confines E[x | y] to one direction
        return TestFunction(name, 2, {"c1": float(params.get("c1", 1.0)), "c2": float(params.get("c2", 2.0))})
    if name == "bullseye":
        d1, d2 = bullseye_radii()
        r1, r2 = float(params.get("r1", d1)), float(params.get("r2", d2))
        if not 0 < r1 < r2:
            raise InvalidInputError("bullseye needs 0 < r1 < r2")
        return TestFunction(name, 2, {"r1": r1, "r2": r2})
    if name == "linear":
        a = np.asarray(params.get("a", _default_unit(5, 2)), dtype=float).ravel()
        if not np.any(a):
            raise InvalidInputError("linear needs a nonzero a")
        return TestFunction(name, a.size, {"a": a})
    # hartmann_log
    ell = float(params.get("ell", 1.0))
    mu0 = float(params.get("mu0", 1.0))
    if ell <= 0 or mu0 <= 0:
        raise InvalidInputError("hartmann_log needs positive ell and mu0")
    return TestFunction(name, 5, {"ell": ell, "mu0": mu0}, mean=HARTMANN_MEAN.copy(), cov=HARTMANN_COV.copy())


def hartmann_induced_field(mu, rho, dp0_dx, eta, B0, ell=1.0, mu0=1.0):
    """Total induced magnetic field of the Hartmann channel flow (physical inputs)."""
    del rho  # the induced field does not depend on density
    s = np.sqrt(eta * mu) / (B0 * ell)
    return dp0_dx * ell * mu0 / (2.0 * B0) * (1.0 - 2.0 * s * np.tanh(1.0 / (2.0 * s)))


def shifted_product_evaluate(x, c1: float, c2: float):
    x = np.asarray(x, dtype=float)
    return (x[..., 0] + c1) * (x[..., 1] + c2)


def evaluate(fn: TestFunction, x):
    """Evaluate ``fn`` at one point (length-m vector) or at the rows of an N x m table."""
    x = np.asarray(x, dtype=float)
    if x.shape[-1] != fn.m or x.ndim not in (1, 2):
        raise DimensionMismatchError(f"{fn.name} takes inputs of dimension {fn.m}, got shape {x.shape}")
    p = fn.params
    if fn.name == "quad1d":
        y = (x @ p["b"]) ** 2
    elif fn.name == "quad3d":
        u = x @ p["B"]
        y = np.sum(u * u, axis=-1) + x @ p["b"]
    elif fn.name == "product":
        y = x[..., 0] * x[..., 1]
    elif fn.name == "shifted_product":
        y = shifted_product_evaluate(x, p["c1"], p["c2"])
    elif fn.name == "bullseye":
        r = np.linalg.norm(x, axis=-1)
        y = np.where((r <= p["r1"]) | (r >= p["r2"]), BULLSEYE_LOW, BULLSEYE_HIGH)
    elif fn.name == "linear":
        y = x @ p["a"]
    else:
        phys = np.exp(x)
        y = hartmann_induced_field(*np.moveaxis(phys, -1, 0), ell=p["ell"], mu0=p["mu0"])
    return float(y) if x.ndim == 1 else np.asarray(y, dtype=float)


def sample_inputs(fn: TestFunction, N: int, seed) -> Dataset:
    if N < 1:
        raise InvalidInputError(f"N must be positive, got {N}")
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((N, fn.m))
    if fn.mean is not None:
        X = fn.mean + X @ np.linalg.cholesky(fn.cov).T
    return Dataset(X, evaluate(fn, X))


def oracle_subspace(fn: TestFunction) -> OracleSubspace:
    p = fn.params
    if fn.name == "quad1d":
        return OracleSubspace(orthonormalize(p["b"]), "exact")
    if fn.name == "quad3d":
        return OracleSubspace(orthonormalize(np.column_stack([p["B"], p["b"]])), "exact")
    if fn.name == "linear":
        return OracleSubspace(orthonormalize(p["a"]), "exact")
    if fn.name in ("product", "shifted_product", "bullseye"):
        return OracleSubspace(np.eye(2), "exact")
    # B_ind = exp(u_p - u_B) * h(log s) with log s = (u_eta + u_mu)/2 - u_B - log ell
    e = np.eye(5)
    d1 = e[2] - e[4]
    d2 = e[4] - 0.5 * (e[3] + e[0])
    return OracleSubspace(orthonormalize(np.column_stack([d1, d2])), "exact")
