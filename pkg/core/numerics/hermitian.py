"""
Small dense Hermitian positive-definite solves, one matrix per frequency bin
"""

import logging

import numpy as np

from core.errors import ShapeMismatch, SingularMatrix

logger = logging.getLogger(__name__)

PIVOT_TOLERANCE = 1e-13
HERMITIAN_RTOL = 1e-12


def is_hermitian(A: np.ndarray, rtol: float = HERMITIAN_RTOL) -> bool:
    """True if A (or every matrix of a stack) equals its conjugate transpose within rtol"""
    A = np.asarray(A)
    scale = max(float(np.max(np.abs(A))), 1.0) if A.size else 1.0
    return bool(np.all(np.abs(A - np.conj(np.swapaxes(A, -1, -2))) <= rtol * scale))


def hermitian_gram(A: np.ndarray) -> np.ndarray:
    """A^H A for a matrix or a stack of matrices (..., m, n) -> (..., n, n)"""
    A = np.asarray(A)
    return np.einsum('...ri,...rj->...ij', np.conj(A), A)


def _check_pivots(L: np.ndarray, A: np.ndarray) -> None:
    pivots = np.abs(np.diagonal(L, axis1=-2, axis2=-1)) ** 2
    norms = np.linalg.norm(A, ord=2, axis=(-2, -1))
    threshold = PIVOT_TOLERANCE * np.asarray(norms)
    smallest = pivots.min(axis=-1)
    if np.any(smallest < threshold):
        worst = float(np.min(smallest))
        raise SingularMatrix(f"Cholesky pivot {worst:.3e} below tolerance", pivot=worst)


def hermitian_solve(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """
    Solve A X = B for Hermitian positive-definite A via Cholesky

    Args:
        A: (n, n) matrix or (..., n, n) stack
        B: right-hand side with matching leading shape (..., n, k)

    Returns:
        np.ndarray: X with the shape of B

    Raises:
        SingularMatrix: if A is not positive definite or a pivot is below
            PIVOT_TOLERANCE * ||A||
    """
    A = np.asarray(A, dtype=complex)
    B = np.asarray(B, dtype=complex)
    if A.shape[-1] != A.shape[-2] or B.shape[-2] != A.shape[-1]:
        raise ShapeMismatch(f"Incompatible shapes for solve: A {A.shape}, B {B.shape}")

    if A.ndim == 2:
        return hermitian_solve(A[np.newaxis], B[np.newaxis])[0]

    # L L^H = A per matrix; two triangular solves per matrix
    try:
        L = np.linalg.cholesky(A)
    except np.linalg.LinAlgError as e:
        raise SingularMatrix(f"Matrix is not positive definite: {e}") from e
    _check_pivots(L, A)
    W = np.linalg.solve(L, B)
    return np.linalg.solve(np.conj(np.swapaxes(L, -1, -2)), W)


def hermitian_inverse(A: np.ndarray) -> np.ndarray:
    """Inverse of a Hermitian PD matrix (or stack) through hermitian_solve"""
    A = np.asarray(A, dtype=complex)
    eye = np.broadcast_to(np.eye(A.shape[-1], dtype=complex), A.shape)
    return hermitian_solve(A, eye)
