"""Dense symmetric linear algebra: eigendecomposition, inverse square root, subspace distance."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, IllConditionedCovarianceError, InvalidInputError

MAX_CONDITION = 1e12
_SYMMETRY_RTOL = 1e-10
_ORTHONORMAL_TOL = 1e-10
# entries within this relative distance of the column's max magnitude count as tied
_SIGN_TIE_RTOL = 1e-12


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenpairs with ``values`` descending and eigenvectors in the columns of ``vectors``."""

    values: np.ndarray
    vectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.values.shape[0]


def as_symmetric(M) -> np.ndarray:
    """Validate a square finite matrix and return its exactly symmetric part."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise InvalidInputError(f"expected a nonempty square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise InvalidInputError("matrix has non-finite entries")
    scale = 1.0 + np.max(np.abs(M))
    if np.max(np.abs(M - M.T)) > _SYMMETRY_RTOL * scale:
        raise InvalidInputError("matrix is not symmetric")
    return 0.5 * (M + M.T)


def fix_signs(V: np.ndarray) -> np.ndarray:
    """Flip columns so the largest-magnitude entry (first one on ties) is positive."""
    V = np.array(V, dtype=float, copy=True)
    for j in range(V.shape[1]):
        col = np.abs(V[:, j])
        k = int(np.argmax(col >= col.max() * (1.0 - _SIGN_TIE_RTOL)))
        if V[k, j] < 0:
            V[:, j] = -V[:, j]
    return V


def sym_eig(M) -> EigenDecomposition:
    M = as_symmetric(M)
    values, vectors = np.linalg.eigh(M)
    values = values[::-1].copy()
    vectors = fix_signs(vectors[:, ::-1])
    return EigenDecomposition(values=values, vectors=vectors)


def inv_sqrt(M) -> np.ndarray:
    """Symmetric inverse square root of an SPD matrix.

    Raises IllConditionedCovarianceError instead of regularizing when the
    matrix is singular to working precision or its condition number
    exceeds ``MAX_CONDITION``.
    """
    M = as_symmetric(M)
    eig = sym_eig(M)
    lam_max = eig.values[0]
    lam_min = eig.values[-1]
    dim = M.shape[0]
    if lam_max <= 0 or lam_min <= dim * 1e-14 * lam_max:
        raise IllConditionedCovarianceError(
            f"covariance is singular or indefinite (eigenvalues in [{lam_min:.3g}, {lam_max:.3g}])"
        )
    if lam_max / lam_min > MAX_CONDITION:
        raise IllConditionedCovarianceError(
            f"covariance condition number {lam_max / lam_min:.3g} exceeds {MAX_CONDITION:.0e}"
        )
    V = eig.vectors
    S = (V / np.sqrt(eig.values)) @ V.T
    return 0.5 * (S + S.T)


def check_orthonormal(A, tol: float = _ORTHONORMAL_TOL) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    if A.ndim == 1:
        A = A[:, None]
    if A.ndim != 2 or A.shape[1] == 0 or A.shape[1] > A.shape[0]:
        raise InvalidInputError(f"basis must be m x n with 1 <= n <= m, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise InvalidInputError("basis has non-finite entries")
    gram = A.T @ A
    if np.max(np.abs(gram - np.eye(A.shape[1]))) > tol:
        raise InvalidInputError("basis columns are not orthonormal")
    return A


def orthonormalize(W) -> np.ndarray:
    """Orthonormal basis for the column span of ``W`` (QR, signs fixed)."""
    W = np.asarray(W, dtype=float)
    if W.ndim == 1:
        W = W[:, None]
    Q, R = np.linalg.qr(W)
    diag = np.abs(np.diag(R))
    if diag.min() <= 1e-12 * max(diag.max(), 1e-300):
        raise InvalidInputError("columns are linearly dependent")
    return fix_signs(Q)


def subspace_distance(A, B) -> float:
    """Sine of the largest principal angle between span(A) and span(B).

    Equals ``||A A^T - B B^T||_2`` for orthonormal bases of equal dimension.
    Large angles use ``sqrt(1 - sigma_min(A^T B)^2)``; small ones the
    residual ``||B - A A^T B||_2``, which keeps full relative accuracy near 0.
    """
    A = check_orthonormal(A)
    B = check_orthonormal(B)
    if A.shape != B.shape:
        raise DimensionMismatchError(f"basis shapes differ: {A.shape} vs {B.shape}")
    AtB = A.T @ B
    sigma_min = np.linalg.svd(AtB, compute_uv=False)[-1]
    sigma_min = min(max(sigma_min, 0.0), 1.0)
    if sigma_min**2 < 0.5:
        return float(np.sqrt(1.0 - sigma_min**2))
    residual = B - A @ AtB
    return float(min(np.linalg.norm(residual, 2), 1.0))
