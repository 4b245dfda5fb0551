"""
Sampled Gram matrices f(t_r + t_s) and their positive-semidefiniteness verdict.
"""
import logging
import math
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainViolation, InputError
from .jacobi import jacobi_eigh

# Set up logger
logger = logging.getLogger(__name__)

MAX_POINTS = 64
DEFAULT_PSD_TOL = 1e-8
PASS = "pass"
FAIL = "fail"


class GramReport:
    """
    Gram matrix of a scalar function on a point set, with its PSD verdict.

    The verdict is None until psd_verdict fills it in.
    """

    def __init__(
        self,
        points: np.ndarray,
        gram: np.ndarray,
        min_eig: Optional[float] = None,
        tol: Optional[float] = None,
        verdict: Optional[str] = None
    ):
        self.points = np.array(points, dtype=float)
        self.points.setflags(write=False)
        self.gram = np.array(gram, dtype=float)
        self.gram.setflags(write=False)
        self.min_eig = None if min_eig is None else float(min_eig)
        self.tol = None if tol is None else float(tol)
        self.verdict = verdict

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def scale(self) -> float:
        """Reference scale max(1, largest diagonal entry) of the tolerance."""
        return max(1.0, float(np.max(np.diag(self.gram))))

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert to dictionary.

        Returns:
            Dictionary representation of the report.
        """
        return {
            "points": self.points.tolist(),
            "gram": self.gram.tolist(),
            "min_eig": self.min_eig,
            "tol": self.tol,
            "verdict": self.verdict,
        }


def gram_matrix(
    f: Callable[[float], float],
    points: Sequence[float],
    domain: Tuple[float, float] = (-math.inf, math.inf)
) -> GramReport:
    """
    Build G[r][s] = f(points[r] + points[s]).

    Args:
        f: Scalar function.
        points: Sample points, 1 <= len(points) <= 64.
        domain: Open interval (a, b) on which f is declared.

    Returns:
        GramReport without a verdict.

    Raises:
        InputError: If the number of points is out of range.
        DomainViolation: If some pairwise sum leaves (a, b).
    """
    pts = np.asarray(points, dtype=float).ravel()
    if not 1 <= pts.size <= MAX_POINTS:
        raise InputError(f"Gram matrices need 1..{MAX_POINTS} points, got {pts.size}")

    lower, upper = domain
    size = pts.size
    gram = np.empty((size, size))
    for r in range(size):
        for s in range(r, size):
            value = pts[r] + pts[s]
            if not lower < value < upper:
                raise DomainViolation(float(value), lower, upper)
            gram[r, s] = gram[s, r] = f(value)

    return GramReport(pts, gram)


def psd_verdict(report: GramReport, tol: float = DEFAULT_PSD_TOL) -> GramReport:
    """
    Fill in the minimal eigenvalue and the PSD verdict of a Gram report.

    The verdict is pass iff min_eig >= -tol * max(1, largest diagonal entry).

    Args:
        report: Gram report.
        tol: Relative tolerance.

    Returns:
        New GramReport with min_eig, tol and verdict set.
    """
    eigenvalues, _ = jacobi_eigh(report.gram)
    min_eig = float(eigenvalues[0])
    verdict = PASS if min_eig >= -tol * report.scale else FAIL
    if verdict == FAIL:
        logger.debug(f"Gram matrix failed PSD test: min_eig={min_eig:.3e}, scale={report.scale:.3e}")
    return GramReport(report.points, report.gram, min_eig, tol, verdict)
