"""
Cyclic Jacobi eigensolver for real symmetric matrices.

Used as the dense eigenvalue oracle and as the eigendecomposition behind the
symmetric matrix functions. It does not share any code path with the secular
solver, which is what makes it useful as a cross-check.
"""
import logging
from typing import Tuple

import numpy as np

from .errors import InputError, NoConvergence, NotSymmetric

# Set up logger
logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-12
DEFAULT_TOL = 1e-14
MAX_SWEEPS = 100


def check_symmetric(matrix: np.ndarray, tol: float = SYMMETRY_TOL) -> np.ndarray:
    """
    Validate a square symmetric matrix and return it as a float array.

    Args:
        matrix: Candidate matrix.
        tol: Entrywise symmetry tolerance, scaled by max(1, max |entry|).

    Returns:
        The matrix as a 2-D float array.

    Raises:
        InputError: If the matrix is not square.
        NotSymmetric: If |M - M^T| exceeds the tolerance anywhere.
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InputError(f"Expected a square matrix, got shape {m.shape}")
    if m.size == 0:
        raise InputError("Matrix must not be empty")

    asymmetry = float(np.max(np.abs(m - m.T)))
    scale = max(1.0, float(np.max(np.abs(m))))
    if asymmetry > tol * scale:
        raise NotSymmetric(asymmetry)
    return m


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def jacobi_eigh(
    matrix: np.ndarray,
    tol: float = DEFAULT_TOL,
    max_sweeps: int = MAX_SWEEPS
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Diagonalise a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps run over all pairs (p, q), p < q, until the off-diagonal Frobenius
    mass is at most tol * max(1, ||M||_F).

    Args:
        matrix: Real symmetric matrix.
        tol: Relative off-diagonal tolerance.
        max_sweeps: Maximum number of sweeps.

    Returns:
        Tuple (eigenvalues ascending, orthogonal eigenvector matrix with
        eigenvectors in columns).

    Raises:
        NotSymmetric: If the input is not symmetric.
        NoConvergence: If max_sweeps sweeps are not enough.
    """
    a = check_symmetric(matrix).copy()
    a = 0.5 * (a + a.T)
    size = a.shape[0]
    v = np.eye(size)

    target = tol * max(1.0, float(np.linalg.norm(a)))
    off = _off_norm(a)

    sweeps = 0
    while off > target:
        if sweeps >= max_sweeps:
            raise NoConvergence(
                f"Jacobi iteration did not converge in {max_sweeps} sweeps "
                f"(off-diagonal mass {off:.3e})"
            )
        for p in range(size - 1):
            for q in range(p + 1, size):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                sign = 1.0 if theta >= 0.0 else -1.0
                t = sign / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q

                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0

                vec_p = v[:, p].copy()
                vec_q = v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
        sweeps += 1
        off = _off_norm(a)

    logger.debug(f"Jacobi converged for size {size} in {sweeps} sweeps")

    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    return eigenvalues[order], v[:, order]
