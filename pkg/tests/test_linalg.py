import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_orthonormal, random_spd
from ridge_recovery.errors import DimensionMismatchError, IllConditionedCovarianceError, InvalidInputError
from ridge_recovery.linalg import fix_signs, inv_sqrt, orthonormalize, subspace_distance, sym_eig


def projector_distance(A, B):
    """Oracle: spectral norm of the projector difference, by a dense symmetric eigensolve."""
    D = A @ A.T - B @ B.T
    return np.max(np.abs(np.linalg.eigvalsh(D)))


def test_sym_eig_identity():
    eig = sym_eig(np.eye(2))
    np.testing.assert_allclose(eig.values, [1, 1])
    np.testing.assert_allclose(eig.vectors.T @ eig.vectors, np.eye(2), atol=1e-12)
    for col in eig.vectors.T:
        assert col[np.argmax(np.abs(col))] > 0


def test_sym_eig_diagonal():
    eig = sym_eig(np.diag([1.0, 3.0]))
    np.testing.assert_allclose(eig.values, [3, 1])
    np.testing.assert_allclose(eig.vectors, [[0, 1], [1, 0]], atol=1e-15)


def test_sym_eig_two_by_two():
    # characteristic polynomial (2 - l)^2 - 1 = 0 gives l = 3, 1
    eig = sym_eig([[2.0, 1.0], [1.0, 2.0]])
    np.testing.assert_allclose(eig.values, [3, 1], atol=1e-14)
    s = 1 / np.sqrt(2)
    np.testing.assert_allclose(eig.vectors[:, 0], [s, s], atol=1e-14)
    np.testing.assert_allclose(eig.vectors[:, 1], [s, -s], atol=1e-14)


@pytest.mark.parametrize("bad", [[[np.nan, 0], [0, 1]], [[1, 2], [0, 1]], np.ones((2, 3))])
def test_sym_eig_rejects_invalid(bad):
    with pytest.raises(InvalidInputError):
        sym_eig(bad)


@given(seed=st.integers(0, 2**32 - 1), m=st.integers(1, 8))
def test_sym_eig_invariants(seed, m):
    rng = np.random.default_rng(seed)
    A = rng.standard_normal((m, m))
    M = A + A.T
    eig = sym_eig(M)
    V, lam = eig.vectors, eig.values
    assert np.all(np.diff(lam) <= 0)
    np.testing.assert_allclose(V.T @ V, np.eye(m), atol=1e-10)
    assert np.linalg.norm(M - (V * lam) @ V.T, 2) <= 1e-8 * (1 + np.linalg.norm(M, 2))
    assert abs(lam.sum() - np.trace(M)) <= 1e-8 * (1 + abs(np.trace(M)))
    for col in V.T:
        assert col[np.argmax(np.abs(col))] > 0
    again = sym_eig(M.copy())
    assert np.array_equal(again.values, lam) and np.array_equal(again.vectors, V)


def test_fix_signs_first_entry_on_ties():
    V = fix_signs(np.array([[-1.0], [1.0]]) / np.sqrt(2))
    np.testing.assert_allclose(V[:, 0], [1 / np.sqrt(2), -1 / np.sqrt(2)])


def test_inv_sqrt_examples():
    np.testing.assert_allclose(inv_sqrt(np.eye(3)), np.eye(3), atol=1e-15)
    np.testing.assert_allclose(inv_sqrt(np.diag([4.0, 9.0])), np.diag([0.5, 1 / 3]), atol=1e-15)


@given(seed=st.integers(0, 2**32 - 1), m=st.integers(1, 10))
def test_inv_sqrt_whitens(seed, m):
    rng = np.random.default_rng(seed)
    M = random_spd(rng, m, cond=1e4)
    S = inv_sqrt(M)
    assert np.array_equal(S, S.T)
    assert np.linalg.norm(S @ M @ S - np.eye(m), 2) <= 1e-8


@pytest.mark.parametrize(
    "M",
    [np.diag([1.0, 0.0]), np.diag([1.0, -1.0]), np.diag([1.0, 1e-13]), np.zeros((2, 2))],
)
def test_inv_sqrt_refuses_ill_conditioned(M):
    with pytest.raises(IllConditionedCovarianceError):
        inv_sqrt(M)


def test_subspace_distance_examples():
    e1, e2 = np.array([[1.0], [0.0]]), np.array([[0.0], [1.0]])
    d = np.array([[1.0], [1.0]]) / np.sqrt(2)
    assert subspace_distance(e1, e1) == 0
    assert subspace_distance(e1, e2) == pytest.approx(1.0, abs=1e-15)
    assert subspace_distance(e1, d) == pytest.approx(projector_distance(e1, d), abs=1e-15)
    assert subspace_distance(e1, d) == pytest.approx(np.sqrt(2) / 2, abs=1e-15)


def test_subspace_distance_shape_mismatch():
    with pytest.raises(DimensionMismatchError):
        subspace_distance(np.eye(3)[:, :1], np.eye(3)[:, :2])
    with pytest.raises(InvalidInputError):
        subspace_distance(np.ones((3, 1)), np.eye(3)[:, :1])


@given(seed=st.integers(0, 2**32 - 1), m=st.integers(2, 9), data=st.data())
def test_subspace_distance_metric_axioms(seed, m, data):
    n = data.draw(st.integers(1, m))
    rng = np.random.default_rng(seed)
    A, B, C = (random_orthonormal(rng, m, n) for _ in range(3))
    dab = subspace_distance(A, B)
    assert 0 <= dab <= 1
    assert dab == pytest.approx(projector_distance(A, B), abs=1e-10)
    assert dab == pytest.approx(subspace_distance(B, A), abs=1e-12)
    assert dab <= subspace_distance(A, C) + subspace_distance(C, B) + 1e-10
    R = random_orthonormal(rng, n, n)
    assert subspace_distance(A @ R, B) == pytest.approx(dab, abs=1e-10)
    assert subspace_distance(A, A @ R) <= 1e-12


def test_subspace_distance_small_angles_accurate():
    theta = 1e-9
    A = np.array([[1.0], [0.0]])
    B = np.array([[np.cos(theta)], [np.sin(theta)]])
    assert subspace_distance(A, B) == pytest.approx(np.sin(theta), rel=1e-6)


def test_orthonormalize_rejects_dependent_columns():
    with pytest.raises(InvalidInputError):
        orthonormalize(np.ones((3, 2)))
