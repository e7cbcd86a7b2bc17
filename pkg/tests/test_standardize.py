import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_orthonormal, random_spd
from ridge_recovery import inverse_regression as ir
from ridge_recovery import standardize as sd
from ridge_recovery.errors import DimensionMismatchError, IllConditionedCovarianceError, InsufficientSamplesError
from ridge_recovery.linalg import orthonormalize, subspace_distance
from ridge_recovery.slicing import SlicingStrategy
from ridge_recovery.standardize import Dataset


def test_two_point_fit():
    s = sd.fit(Dataset(np.array([[-1.0], [1.0]]), np.array([0.0, 1.0])))
    np.testing.assert_allclose(s.mean, [0.0])
    np.testing.assert_allclose(s.cov, [[2.0]])
    np.testing.assert_allclose(s.whitener, [[1 / np.sqrt(2)]])


def test_already_standard_data_gives_identity_whitener(rng):
    X = rng.standard_normal((500, 4))
    s0 = sd.fit(Dataset(X, X[:, 0]))
    Z = sd.apply(s0, Dataset(X, X[:, 0]))
    s = sd.fit(Z)
    np.testing.assert_allclose(s.whitener, np.eye(4), atol=1e-8)


def test_fit_recovers_generator_moments():
    rng = np.random.default_rng(2)
    mu = np.array([1.0, -2.0, 0.5])
    Sigma = np.array([[2.0, 0.3, 0.0], [0.3, 1.0, -0.2], [0.0, -0.2, 0.5]])
    X = rng.multivariate_normal(mu, Sigma, size=10**6)
    s = sd.fit(Dataset(X, np.zeros(len(X))))
    assert np.max(np.abs(s.mean - mu)) <= 5e-3
    assert np.max(np.abs(s.cov - Sigma)) <= 1e-2


def test_fit_errors():
    with pytest.raises(InsufficientSamplesError):
        sd.fit(Dataset(np.ones((3, 3)), np.zeros(3)))
    X = np.column_stack([np.arange(10.0), 2 * np.arange(10.0)])
    with pytest.raises(IllConditionedCovarianceError):
        sd.fit(Dataset(X, np.zeros(10)))


def test_apply_fitting_set_is_standard(rng):
    X = rng.standard_normal((300, 3)) @ rng.standard_normal((3, 3)) + 4.0
    data = Dataset(X, rng.standard_normal(300))
    Z = sd.apply(sd.fit(data), data)
    assert np.max(np.abs(Z.X.mean(axis=0))) <= 1e-10
    np.testing.assert_allclose(np.cov(Z.X, rowvar=False), np.eye(3), atol=1e-8)
    assert np.array_equal(Z.y, data.y)


def test_apply_mean_row_maps_to_zero(rng):
    data = Dataset(rng.standard_normal((50, 3)), np.zeros(50))
    s = sd.fit(data)
    np.testing.assert_allclose(sd.transform(s, s.mean), np.zeros((1, 3)), atol=1e-15)


def test_apply_dimension_mismatch(rng):
    s = sd.fit(Dataset(rng.standard_normal((50, 3)), np.zeros(50)))
    with pytest.raises(DimensionMismatchError):
        sd.apply(s, Dataset(np.zeros((4, 2)), np.zeros(4)))
    with pytest.raises(DimensionMismatchError):
        sd.pullback(s, np.eye(2))


def test_affine_remap_changes_standardized_data_by_rotation_only(rng):
    X = rng.standard_normal((400, 4))
    B = rng.standard_normal((4, 4)) + 2 * np.eye(4)
    b = rng.standard_normal(4)
    y = np.zeros(400)
    Zx = sd.apply(sd.fit(Dataset(X, y)), Dataset(X, y)).X
    Zz = sd.apply(sd.fit(Dataset(X @ B.T + b, y)), Dataset(X @ B.T + b, y)).X
    np.testing.assert_allclose(Zx @ Zx.T, Zz @ Zz.T, atol=1e-6)


def test_pullback_identity_and_1d(rng):
    s = sd.Standardizer(mean=np.zeros(3), cov=np.eye(3), whitener=np.eye(3))
    W = random_orthonormal(rng, 3, 2)
    np.testing.assert_allclose(sd.pullback(s, W), W)
    s1 = sd.Standardizer(mean=np.zeros(1), cov=np.array([[4.0]]), whitener=np.array([[0.5]]))
    np.testing.assert_allclose(sd.pullback(s1, np.array([[1.0]])), [[1.0]])


def test_pullback_recovers_linear_direction_under_correlated_inputs():
    # y = a^T x with x ~ N(0, Sigma): E[x | a^T x] is along Sigma a, yet the pulled-back
    # SIR direction must span a itself
    rng = np.random.default_rng(7)
    Sigma = random_spd(rng, 4, cond=20.0)
    a = np.array([1.0, -2.0, 0.5, 0.0])
    a /= np.linalg.norm(a)
    X = rng.multivariate_normal(np.zeros(4), Sigma, size=10**5)
    data = Dataset(X, X @ a)
    f = ir.fit(data, "sir", SlicingStrategy("equal-count", 20))
    w = sd.pullback(f.standardizer, f.estimate.eig.vectors[:, :1])
    assert subspace_distance(orthonormalize(w), a[:, None]) < 0.05
    # the naive conditional-mean direction is measurably different
    naive = orthonormalize(Sigma @ a)
    assert subspace_distance(naive, a[:, None]) > 0.1


@given(seed=st.integers(0, 2**32 - 1), m=st.integers(1, 5))
def test_standardize_idempotent(seed, m):
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((40, m)) @ random_spd(rng, m, cond=50.0) + rng.standard_normal(m)
    data = Dataset(X, rng.standard_normal(40))
    Z = sd.apply(sd.fit(data), data)
    ZZ = sd.apply(sd.fit(Z), Z)
    assert np.max(np.abs(ZZ.X - Z.X)) <= 1e-8


@given(seed=st.integers(0, 2**32 - 1), m=st.integers(1, 5), method=st.sampled_from(["sir", "save"]))
def test_affine_eigenvalue_invariance(seed, m, method):
    rng = np.random.default_rng(seed)
    N = 200
    X = rng.standard_normal((N, m))
    y = np.sin(X @ rng.standard_normal(m)) + X[:, 0] ** 2
    Q1, Q2 = random_orthonormal(rng, m, m), random_orthonormal(rng, m, m)
    B = (Q1 * np.exp(rng.uniform(-2, 2, m))) @ Q2.T
    b = 10 * rng.standard_normal(m)
    strategy = SlicingStrategy("equal-count", 5)
    lam_x = ir.fit(Dataset(X, y), method, strategy).estimate.eig.values
    lam_z = ir.fit(Dataset(X @ B.T + b, y), method, strategy).estimate.eig.values
    np.testing.assert_allclose(lam_z, lam_x, rtol=0, atol=1e-6 * max(lam_x[0], 1e-300))
