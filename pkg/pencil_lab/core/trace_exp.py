"""
Matrix exponentials of symmetric matrices and the trace identities built on them.

The central identity is, for real t and xi,

    sum_k exp(xi * nu_k(t)) = trace exp(xi A + t xi B),

which ties the roots of the secular equation to the trace function
phi(t) = trace exp(U + tV) with U = xi A, V = xi B.
"""
import logging
import math
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from .arrowhead_rep import build_arrowhead
from .errors import HypothesisViolated, InputError, SizeMismatch
from .gram import DEFAULT_PSD_TOL, GramReport, gram_matrix, psd_verdict
from .jacobi import check_symmetric, jacobi_eigh
from .pencil_core import PencilSpec
from .secular_solver import DEFAULT_TOL, roots_real

# Set up logger
logger = logging.getLogger(__name__)

HYPOTHESIS_TOL = 1e-12


class SymMatrix:
    """Dense real symmetric matrix."""

    def __init__(self, entries: Any):
        """
        Initialize symmetric matrix.

        Args:
            entries: Square array-like, symmetric within 1e-12.

        Raises:
            NotSymmetric: If the entries are not symmetric.
        """
        m = check_symmetric(entries)
        self._entries = 0.5 * (m + m.T)
        self._entries.setflags(write=False)

    @classmethod
    def zeros(cls, size: int) -> "SymMatrix":
        return cls(np.zeros((size, size)))

    @classmethod
    def diagonal(cls, values: Sequence[float]) -> "SymMatrix":
        return cls(np.diag(np.asarray(values, dtype=float)))

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def size(self) -> int:
        return int(self._entries.shape[0])

    def is_diagonal(self) -> bool:
        return bool(np.all(self._entries == np.diag(np.diag(self._entries))))

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        _check_sizes(self, other)
        return SymMatrix(self._entries + other._entries)

    def scaled(self, factor: float) -> "SymMatrix":
        return SymMatrix(factor * self._entries)

    def shifted(self, rho: float) -> "SymMatrix":
        """Return M + rho I."""
        return SymMatrix(self._entries + rho * np.eye(self.size))

    def __repr__(self) -> str:
        return f"SymMatrix({self._entries.tolist()})"


def _check_sizes(first: SymMatrix, second: SymMatrix) -> None:
    if first.size != second.size:
        raise SizeMismatch(first.size, second.size)


def funm_sym(M: SymMatrix, h: Callable[[np.ndarray], np.ndarray]) -> SymMatrix:
    """
    Apply a scalar function to a symmetric matrix through its eigendecomposition.

    Args:
        M: Symmetric matrix.
        h: Vectorised scalar function, real on the real axis.

    Returns:
        h(M) = V diag(h(w)) V^T.
    """
    w, v = jacobi_eigh(M.entries)
    result = (v * h(w)) @ v.T
    return SymMatrix(0.5 * (result + result.T))


def expm_sym(M: SymMatrix) -> SymMatrix:
    """
    Matrix exponential of a symmetric matrix.

    Args:
        M: Symmetric matrix.

    Returns:
        exp(M), symmetric positive definite.
    """
    return funm_sym(M, np.exp)


def bmv_phi(U: SymMatrix, V: SymMatrix, t: float) -> float:
    """
    Trace function phi(t) = trace exp(U + tV).

    Args:
        U: Symmetric matrix.
        V: Symmetric matrix of the same size.
        t: Real parameter.

    Returns:
        The trace, strictly positive.

    Raises:
        SizeMismatch: If U and V differ in size.
    """
    _check_sizes(U, V)
    return float(np.trace(expm_sym(U + V.scaled(t)).entries))


def sum_exp_roots(spec: PencilSpec, t: float, xi: float, tol: float = DEFAULT_TOL) -> float:
    """
    Compute g(t, xi) = sum_k exp(xi * nu_k(t)).

    Args:
        spec: Validated pencil.
        t: Real parameter.
        xi: Real exponent scale.
        tol: Residual tolerance of the secular solve.

    Returns:
        The sum over the n + 1 real roots.
    """
    roots = roots_real(spec, t, tol).roots
    return float(np.sum(np.exp(xi * roots)))


def verify_trace_identity(spec: PencilSpec, t: float, xi: float) -> float:
    """
    Compare sum_k exp(xi nu_k(t)) with trace exp(xi A + t xi B).

    The arm sign is +1 for xi > 0 and -1 otherwise, which keeps the
    off-diagonal entries of xi A nonnegative.

    Args:
        spec: Validated pencil.
        t: Real parameter.
        xi: Real exponent scale.

    Returns:
        Relative error |lhs - rhs| / (1 + |lhs|).
    """
    pair = build_arrowhead(spec, 1 if xi > 0 else -1)
    lhs = sum_exp_roots(spec, t, xi)
    U = SymMatrix(xi * pair.matrix_A())
    V = SymMatrix(xi * pair.matrix_B())
    rhs = bmv_phi(U, V, t)
    error = abs(lhs - rhs) / (1.0 + abs(lhs))
    logger.debug(f"Trace identity at t={t}, xi={xi}: lhs={lhs!r}, rhs={rhs!r}, error={error:.3e}")
    return float(error)


def spectral_trace_identity(
    spec: PencilSpec,
    t: float,
    h: Callable[[np.ndarray], np.ndarray]
) -> float:
    """
    Compare sum_k h(nu_k(t)) with the spectral trace of h(A + tB).

    Args:
        spec: Validated pencil.
        t: Real parameter.
        h: Vectorised scalar function.

    Returns:
        Relative error |lhs - rhs| / (1 + |lhs|).
    """
    pair = build_arrowhead(spec, 1)
    lhs = float(np.sum(h(roots_real(spec, t).roots)))
    rhs = float(np.trace(funm_sym(SymMatrix(pair.pencil_matrix(t)), h).entries))
    return abs(lhs - rhs) / (1.0 + abs(lhs))


def lie_product_approx(U: SymMatrix, V: SymMatrix, t: float, m: int) -> np.ndarray:
    """
    Lie product approximation (exp(U/m) exp(tV/m))^m.

    The power is taken by repeated squaring.

    Args:
        U: Symmetric matrix.
        V: Symmetric matrix of the same size.
        t: Real parameter.
        m: Number of factors, m >= 1.

    Returns:
        The approximation as a dense (generally non-symmetric) array.

    Raises:
        SizeMismatch: If U and V differ in size.
        InputError: If m < 1.
    """
    _check_sizes(U, V)
    if m < 1:
        raise InputError(f"Lie product needs m >= 1, got {m}")
    step = expm_sym(U.scaled(1.0 / m)).entries @ expm_sym(V.scaled(t / m)).entries
    return np.linalg.matrix_power(step, int(m))


def rho_shift_expm(U: SymMatrix, V: SymMatrix, t: float, rho: float) -> np.ndarray:
    """
    exp(U + tV) computed as exp(-rho) exp(U_rho + tV) with U_rho = U + rho I.

    Args:
        U: Symmetric matrix.
        V: Symmetric matrix of the same size.
        t: Real parameter.
        rho: Diagonal shift.

    Returns:
        The exponential as a dense array.
    """
    _check_sizes(U, V)
    return math.exp(-rho) * expm_sym(U.shifted(rho) + V.scaled(t)).entries


class EntryGram:
    """Gram report of one matrix entry t -> M(t)[i, j]."""

    def __init__(self, i: int, j: int, source: str, report: GramReport):
        self.i = i
        self.j = j
        self.source = source
        self.report = report

    def to_dict(self) -> Dict[str, Any]:
        return {"i": self.i, "j": self.j, "source": self.source, **self.report.to_dict()}


def _entry_grams(
    matrix_at: Callable[[float], np.ndarray],
    size: int,
    points: np.ndarray,
    source: str,
    tol: float
) -> List[EntryGram]:
    cache: Dict[float, np.ndarray] = {}

    def cached(value: float) -> np.ndarray:
        if value not in cache:
            cache[value] = matrix_at(value)
        return cache[value]

    results = []
    for i in range(size):
        for j in range(size):
            report = gram_matrix(lambda value: float(cached(value)[i, j]), points)
            results.append(EntryGram(i, j, source, psd_verdict(report, tol)))
    return results


def toy_entrywise_check(
    U: SymMatrix,
    V: SymMatrix,
    t_points: Sequence[float],
    m: Optional[int] = None,
    tol: float = DEFAULT_PSD_TOL
) -> List[EntryGram]:
    """
    Certify that every entry of exp(U + tV) is exponentially convex in t.

    Requires nonnegative off-diagonal entries in U and a diagonal V. When m is
    given, the entries of the Lie approximation (exp(U/m) exp(tV/m))^m are
    certified as well.

    Args:
        U: Symmetric matrix with nonnegative off-diagonal entries.
        V: Diagonal symmetric matrix.
        t_points: Sample points of the Gram matrices.
        m: Optional number of Lie product factors.
        tol: Relative PSD tolerance.

    Returns:
        One EntryGram per entry (and per source when m is given).

    Raises:
        SizeMismatch: If U and V differ in size.
        HypothesisViolated: If U has a negative off-diagonal entry or V is not diagonal.
    """
    _check_sizes(U, V)
    off = U.entries - np.diag(np.diag(U.entries))
    if np.min(off) < -HYPOTHESIS_TOL:
        raise HypothesisViolated(
            f"U has a negative off-diagonal entry ({float(np.min(off))!r})"
        )
    if not V.is_diagonal():
        raise HypothesisViolated("V must be diagonal")

    points = np.asarray(t_points, dtype=float)
    results = _entry_grams(
        lambda value: expm_sym(U + V.scaled(value)).entries, U.size, points, "exact", tol
    )
    if m is not None:
        results += _entry_grams(
            lambda value: lie_product_approx(U, V, value, m), U.size, points, "lie", tol
        )

    failed = [entry for entry in results if not entry.report.passed]
    if failed:
        logger.warning(f"{len(failed)} of {len(results)} entry Gram matrices failed the PSD test")
    return results
