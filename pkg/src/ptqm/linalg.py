"""Dense complex linear algebra: eigendecomposition with biorthonormal
left/right pairs, matrix exponential, Hermitian square root, and
self-adjointness relative to a metric.

All routines are pure functions on square complex ``numpy`` arrays.  The
default tolerance ``DEFAULT_TOL`` is relative in the Frobenius norm.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import (
    DimensionMismatch,
    InvalidMetric,
    NonDiagonalizable,
    NotPositiveDefinite,
)

DEFAULT_TOL = 1e-10


def as_square_matrix(M, name: str = "matrix") -> np.ndarray:
    """Coerce to a square complex array, rejecting non-finite entries."""
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise DimensionMismatch(f"{name} contains non-finite entries")
    return A


def as_vector(psi, dim: int | None = None, name: str = "vector") -> np.ndarray:
    v = np.asarray(psi, dtype=complex)
    if v.ndim != 1:
        raise DimensionMismatch(f"{name} must be one-dimensional, got shape {v.shape}")
    if dim is not None and v.shape[0] != dim:
        raise DimensionMismatch(f"{name} has length {v.shape[0]}, expected {dim}")
    return v


def frobenius(M: np.ndarray) -> float:
    return float(np.linalg.norm(M))


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues with biorthonormal right/left eigenvector pairs.

    ``right_vectors[:, n]`` and ``left_vectors[:, n]`` hold the n-th right
    eigenvector phi_n and left eigenvector chi_n, normalized so that
    chi_m^dagger phi_n = delta_mn.  The left vectors are rows of the inverse
    of the right-vector matrix, so biorthonormality holds by construction.
    """

    eigenvalues: np.ndarray
    right_vectors: np.ndarray
    left_vectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    def reconstruct(self) -> np.ndarray:
        """sum_n lambda_n phi_n chi_n^dagger."""
        return (self.right_vectors * self.eigenvalues) @ self.left_vectors.conj().T


def eig(M, tol: float = DEFAULT_TOL) -> EigenSystem:
    """Eigendecompose a diagonalizable matrix.

    Eigenvalues are sorted by descending real part, ties broken by
    descending imaginary part.  Raises :class:`NonDiagonalizable` when the
    spectral reconstruction misses the input by more than ``tol``
    (relative), which is how a defective matrix / exceptional point shows
    up numerically.
    """
    A = as_square_matrix(M)
    w, V = np.linalg.eig(A)
    order = np.lexsort((-w.imag, -w.real))
    w = w[order]
    V = V[:, order]
    try:
        Winv = np.linalg.inv(V)
    except np.linalg.LinAlgError as exc:
        raise NonDiagonalizable("eigenvector matrix is singular") from exc
    left = Winv.conj().T
    es = EigenSystem(eigenvalues=w, right_vectors=V, left_vectors=left)
    scale = max(frobenius(A), 1.0)
    if frobenius(es.reconstruct() - A) > tol * scale:
        raise NonDiagonalizable(
            "spectral reconstruction residual exceeds tolerance; "
            "matrix is defective or near an exceptional point"
        )
    return es


def matrix_exponential(M) -> np.ndarray:
    """exp(M) for an arbitrary finite square matrix."""
    A = as_square_matrix(M)
    return scipy.linalg.expm(A)


def _hermitian_eigensystem(P, tol: float, name: str):
    A = as_square_matrix(P, name)
    if frobenius(A - A.conj().T) > tol * max(frobenius(A), 1.0):
        raise NotPositiveDefinite(f"{name} is not Hermitian")
    w, Q = np.linalg.eigh(A)
    return A, w, Q


def hermitian_sqrt(P, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Hermitian positive-definite square root rho of P, rho^2 = P."""
    A, w, Q = _hermitian_eigensystem(P, tol, "positive-definite matrix")
    if w.min() <= tol * max(abs(w).max(), 1.0):
        raise NotPositiveDefinite(
            f"matrix has eigenvalue {w.min():.3e} at or below tolerance"
        )
    root = (Q * np.sqrt(w)) @ Q.conj().T
    return 0.5 * (root + root.conj().T)


def check_metric_matrix(eta, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Validate that eta is Hermitian positive-definite; return it coerced."""
    try:
        A, w, _ = _hermitian_eigensystem(eta, tol, "metric")
    except NotPositiveDefinite as exc:
        raise InvalidMetric(str(exc)) from exc
    if w.min() <= tol * max(abs(w).max(), 1.0):
        raise InvalidMetric(f"metric has non-positive eigenvalue {w.min():.3e}")
    return A


def is_self_adjoint_wrt(A, eta, tol: float = DEFAULT_TOL) -> bool:
    """True iff A is self-adjoint in the inner product <psi, phi> = psi^dagger eta phi.

    Equivalent to the intertwining relation eta A = A^dagger eta; the test
    is relative: ||eta A - A^dagger eta|| <= tol * ||eta A||.
    """
    Am = as_square_matrix(A)
    etam = check_metric_matrix(eta, tol)
    if Am.shape != etam.shape:
        raise DimensionMismatch("operator and metric dimensions differ")
    lhs = etam @ Am
    resid = frobenius(lhs - Am.conj().T @ etam)
    return resid <= tol * max(frobenius(lhs), np.finfo(float).tiny)
