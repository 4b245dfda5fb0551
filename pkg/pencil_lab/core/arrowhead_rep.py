"""
Arrowhead determinant representation of the pencil.

With A the symmetric arrowhead matrix

    A = [[0,      a_1, ..., a_n],
         [a_1,   mu_1,         ],
         [...,         ...,    ],
         [a_n,              mu_n]],   a_p = sign * sqrt(alpha_p),

and B = e_0 e_0^T, the identity det(zI - A - tB) = P(z) - tQ(z) holds for
all complex z and t. The eigenvalues of A + tB are therefore the roots of
R(z) = t.
"""
import logging
from typing import Any, Dict

import numpy as np

from .errors import InputError
from .jacobi import DEFAULT_TOL as JACOBI_TOL
from .jacobi import jacobi_eigh
from .pencil_core import PencilSpec, pencil_poly
from .secular_solver import DEFAULT_TOL, RootSet, roots_real

# Set up logger
logger = logging.getLogger(__name__)

SAMPLE_BOX = 5.0


class ArrowheadPair:
    """
    The matrices A (arrowhead) and B (rank one) of the determinant representation.
    """

    def __init__(self, spec: PencilSpec, sign: int):
        """
        Initialize arrowhead pair.

        Args:
            spec: Pencil the pair represents.
            sign: Global sign of the arm entries, +1 or -1.
        """
        self.spec = spec
        self.sign = int(sign)
        self.size = spec.n + 1

        self.diag = np.concatenate(([0.0], spec.mu))
        self.diag.setflags(write=False)
        self.arm = self.sign * np.sqrt(spec.alpha)
        self.arm.setflags(write=False)

    def matrix_A(self) -> np.ndarray:
        a = np.diag(self.diag)
        a[0, 1:] = self.arm
        a[1:, 0] = self.arm
        return a

    def matrix_B(self) -> np.ndarray:
        b = np.zeros((self.size, self.size))
        b[0, 0] = 1.0
        return b

    def pencil_matrix(self, t: float) -> np.ndarray:
        """Return A + tB."""
        m = self.matrix_A()
        m[0, 0] += t
        return m

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert to dictionary.

        Returns:
            Dictionary representation of the pair.
        """
        return {
            "size": self.size,
            "sign": self.sign,
            "diag": self.diag.tolist(),
            "arm": self.arm.tolist(),
            "A": self.matrix_A().tolist(),
            "B": self.matrix_B().tolist(),
        }


def build_arrowhead(spec: PencilSpec, sign: int = 1) -> ArrowheadPair:
    """
    Build the arrowhead pair of a pencil.

    Args:
        spec: Validated pencil.
        sign: +1 for a nonnegative arm, -1 for a nonpositive one.

    Returns:
        ArrowheadPair with arm[p]^2 = alpha_p.

    Raises:
        InputError: If sign is not +1 or -1.
    """
    if sign not in (1, -1):
        raise InputError(f"Arm sign must be +1 or -1, got {sign!r}")
    return ArrowheadPair(spec, sign)


def char_poly_eval(pair: ArrowheadPair, z: complex, t: complex) -> complex:
    """
    Evaluate det(zI - A - tB) through its cofactor expansion.

    The determinant equals (z - t) prod_p (z - mu_p)
    - sum_k arm_k^2 prod_{p != k} (z - mu_p).

    Args:
        pair: Arrowhead pair.
        z: Spectral variable.
        t: Pencil parameter.

    Returns:
        The determinant as a complex number.
    """
    z = complex(z)
    d = z - pair.spec.mu.astype(complex)

    # leave-one-out products without dividing by (z - mu_k)
    prefix = np.concatenate(([1.0 + 0.0j], np.cumprod(d)[:-1]))
    suffix = np.concatenate((np.cumprod(d[::-1])[::-1][1:], [1.0 + 0.0j]))
    others = prefix * suffix

    full = np.prod(d)
    return complex((z - complex(t)) * full - np.sum(pair.arm ** 2 * others))


def verify_det_identity(
    spec: PencilSpec,
    pair: ArrowheadPair,
    samples: int = 100,
    seed: int = 42
) -> float:
    """
    Compare det(zI - A - tB) with P(z) - tQ(z) at random complex points.

    Args:
        spec: Validated pencil.
        pair: Arrowhead pair built from spec.
        samples: Number of random (z, t) pairs drawn from the box [-5, 5] + i[-5, 5].
        seed: Seed of the random stream.

    Returns:
        Max over samples of |difference| / (1 + |P(z) - tQ(z)|).
    """
    if samples < 1:
        raise InputError(f"Sample count must be positive, got {samples}")

    rng = np.random.default_rng(seed)
    z = rng.uniform(-SAMPLE_BOX, SAMPLE_BOX, samples) + 1j * rng.uniform(-SAMPLE_BOX, SAMPLE_BOX, samples)
    t = rng.uniform(-SAMPLE_BOX, SAMPLE_BOX, samples) + 1j * rng.uniform(-SAMPLE_BOX, SAMPLE_BOX, samples)

    worst = 0.0
    for zi, ti in zip(z, t):
        expected = pencil_poly(spec, ti)(zi)
        actual = char_poly_eval(pair, zi, ti)
        worst = max(worst, abs(actual - expected) / (1.0 + abs(expected)))

    logger.debug(f"Determinant identity max relative error {worst:.3e} over {samples} samples")
    return float(worst)


def eigs_arrowhead(pair: ArrowheadPair, t: float, tol: float = DEFAULT_TOL) -> RootSet:
    """
    Eigenvalues of A + tB via the secular equation of the originating pencil.

    Args:
        pair: Arrowhead pair.
        t: Real parameter value.
        tol: Residual tolerance of the secular solve.

    Returns:
        RootSet, eigenvalues sorted strictly decreasing.
    """
    return roots_real(pair.spec, t, tol)


def dense_eigs_oracle(matrix: np.ndarray, tol: float = JACOBI_TOL) -> np.ndarray:
    """
    Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Args:
        matrix: Real symmetric matrix.
        tol: Relative off-diagonal tolerance.

    Returns:
        Eigenvalues sorted ascending.

    Raises:
        NotSymmetric: If the matrix is not symmetric.
        NoConvergence: If 100 sweeps do not suffice.
    """
    eigenvalues, _ = jacobi_eigh(matrix, tol)
    return eigenvalues
