"""
Real roots of the secular equation R(z) = t.

For real t the n + 1 roots are real, simple and interlace with the poles:

    nu_0 > mu_1 > nu_1 > mu_2 > ... > mu_n > nu_n.

Each root therefore owns a bracket on which R - t increases from -inf (or a
negative value) to +inf (or a positive value). The solver runs a safeguarded
Newton iteration on all brackets at once.
"""
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import InputError, ToleranceNotMet
from .pencil_core import PencilSpec, pencil_poly
from ..utils.threading import ThreadingManager

# Set up logger
logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 200
NEAR_POLE = 1e-10
ULP_SCAN = 64
_EPS = np.finfo(float).eps


class RootSet:
    """
    The n + 1 real roots of R(z) = t at a real parameter value.
    """

    def __init__(self, t: float, roots: np.ndarray, residual: float):
        """
        Initialize root set.

        Args:
            t: Parameter value.
            roots: Roots sorted strictly decreasing.
            residual: Max over k of |R(nu_k) - t|.
        """
        self.t = float(t)
        self.roots = np.array(roots, dtype=float)
        self.roots.setflags(write=False)
        self.residual = float(residual)

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert to dictionary.

        Returns:
            Dictionary representation of the root set.
        """
        return {
            "t": self.t,
            "roots": self.roots.tolist(),
            "residual": self.residual,
        }

    def __repr__(self) -> str:
        return f"RootSet(t={self.t!r}, roots={self.roots.tolist()}, residual={self.residual:.3e})"


def _secular_terms(spec: PencilSpec, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    d = x[:, None] - spec.mu[None, :]
    value = x - np.sum(spec.alpha / d, axis=1)
    slope = 1.0 + np.sum(spec.alpha / d ** 2, axis=1)
    return value, slope


def _R_real(spec: PencilSpec, x: float) -> float:
    value, _ = _secular_terms(spec, np.array([x], dtype=float))
    return float(value[0])


def _outer_width(t: float) -> float:
    return max(1.0, abs(t))


def bracket_k(spec: PencilSpec, t: float, k: int) -> Tuple[float, float]:
    """
    Return the interval that contains root nu_k(t).

    Args:
        spec: Validated pencil.
        t: Real parameter value.
        k: Root index, 0 <= k <= n.

    Returns:
        (lo, hi) with R - t < 0 just above lo and R - t > 0 just below hi.
        For k = 0 the upper end is found by doubling until R(hi) > t; for
        k = n the lower end by doubling until R(lo) < t.

    Raises:
        InputError: If k is out of range or t is not finite.
    """
    if not np.isfinite(t):
        raise InputError(f"Parameter t must be finite, got {t!r}")
    if not 0 <= k <= spec.n:
        raise InputError(f"Root index {k} outside 0..{spec.n}")

    mu = spec.mu
    if k == 0:
        width = _outer_width(t)
        while _R_real(spec, mu[0] + width) <= t:
            width *= 2.0
        return float(mu[0]), float(mu[0] + width)
    if k == spec.n:
        width = _outer_width(t)
        while _R_real(spec, mu[-1] - width) >= t:
            width *= 2.0
        return float(mu[-1] - width), float(mu[-1])
    return float(mu[k]), float(mu[k - 1])


def _brackets(spec: PencilSpec, t: float) -> Tuple[np.ndarray, np.ndarray]:
    pairs = [bracket_k(spec, t, k) for k in range(spec.n + 1)]
    lo = np.array([p[0] for p in pairs])
    hi = np.array([p[1] for p in pairs])
    return lo, hi


def _residuals(spec: PencilSpec, t: float, roots: np.ndarray) -> np.ndarray:
    """Residuals |R(nu) - t|, switching to |P(nu) - tQ(nu)| next to a pole."""
    value, _ = _secular_terms(spec, roots)
    residual = np.abs(value - t)

    gap = np.min(np.abs(roots[:, None] - spec.mu[None, :]), axis=1)
    near = gap < NEAR_POLE
    if np.any(near):
        poly = pencil_poly(spec, t)
        residual[near] = np.abs(poly(roots[near].astype(complex)))
    return residual


def _attainable(spec: PencilSpec, t: float, x: np.ndarray) -> np.ndarray:
    """Smallest residual double precision can promise at x: one ulp of slope plus rounding."""
    d = x[:, None] - spec.mu[None, :]
    slope = 1.0 + np.sum(spec.alpha / d ** 2, axis=1)
    magnitude = np.abs(x) + abs(t) + np.sum(spec.alpha / np.abs(d), axis=1)
    return slope * np.spacing(x) + 16.0 * _EPS * magnitude


def _best_representable(
    spec: PencilSpec,
    t: float,
    x: np.ndarray,
    lo: np.ndarray,
    hi: np.ndarray
) -> np.ndarray:
    """Replace each x by the double within ULP_SCAN ulps, strictly inside (lo, hi), minimising |R - t|."""
    columns = [x]
    up = x.copy()
    down = x.copy()
    for _ in range(ULP_SCAN):
        up = np.nextafter(up, np.inf)
        down = np.nextafter(down, -np.inf)
        columns.extend((up, down))
    grid = np.stack(columns, axis=1)

    with np.errstate(divide="ignore", invalid="ignore"):
        value, _ = _secular_terms(spec, grid.ravel())
        residual = np.abs(value - t).reshape(grid.shape)
    inside = (grid > lo[:, None]) & (grid < hi[:, None])
    residual = np.where(inside, residual, np.inf)
    return grid[np.arange(grid.shape[0]), np.argmin(residual, axis=1)]


def roots_real(spec: PencilSpec, t: float, tol: float = DEFAULT_TOL) -> RootSet:
    """
    Solve R(z) = t for its n + 1 real roots.

    Each bracket is bisected until the Newton step from the current iterate
    stays inside it, then Newton takes over. An iterate stops when its
    residual is at most tol * (1 + |t|), when Newton no longer moves it, or
    when its bracket has shrunk to floating-point resolution. Iterates that
    stopped above the residual target are replaced by the best double within
    ULP_SCAN ulps. Close poles can make the target unreachable in double
    precision, so the final check accepts a residual up to one ulp of slope.
    Roots within NEAR_POLE of a pole are accepted as they are.

    Args:
        spec: Validated pencil.
        t: Real parameter value.
        tol: Residual tolerance.

    Returns:
        RootSet with roots sorted strictly decreasing.

    Raises:
        InputError: If t is not finite or tol is not positive.
        ToleranceNotMet: If MAX_ITERATIONS pass without convergence, or a root
            misses both the target and the attainable residual.
    """
    t = float(t)
    if tol <= 0:
        raise InputError(f"Tolerance must be positive, got {tol!r}")

    lo, hi = _brackets(spec, t)
    a = lo.copy()
    b = hi.copy()
    x = 0.5 * (a + b)
    active = np.ones(x.size, dtype=bool)
    threshold = tol * (1.0 + abs(t))

    for iteration in range(MAX_ITERATIONS):
        idx = np.flatnonzero(active)
        xi = x[idx]
        value, slope = _secular_terms(spec, xi)
        f = value - t

        done = np.abs(f) <= threshold

        ai = np.where(f < 0.0, xi, a[idx])
        bi = np.where(f < 0.0, b[idx], xi)
        a[idx] = ai
        b[idx] = bi

        x_new = xi - f / slope
        outside = ~((x_new > ai) & (x_new < bi))
        x_new = np.where(outside, 0.5 * (ai + bi), x_new)

        resolution = 2.0 * _EPS * np.maximum(np.abs(ai), np.abs(bi))
        stalled = (x_new == xi) | (bi - ai <= resolution) | (x_new <= ai) | (x_new >= bi)

        x[idx] = np.where(done | stalled, xi, x_new)
        active[idx] = ~(done | stalled)

        if not np.any(active):
            logger.debug(f"Secular solve at t={t} converged in {iteration + 1} iterations")
            break
    else:
        residual = float(np.max(_residuals(spec, t, x)))
        raise ToleranceNotMet(MAX_ITERATIONS, residual)

    value, _ = _secular_terms(spec, x)
    missed = np.abs(value - t) > threshold
    if np.any(missed):
        x[missed] = _best_representable(spec, t, x[missed], lo[missed], hi[missed])

    residuals = _residuals(spec, t, x)
    gap = np.min(np.abs(x[:, None] - spec.mu[None, :]), axis=1)
    failed = (residuals > np.maximum(threshold, _attainable(spec, t, x))) & (gap >= NEAR_POLE)
    if np.any(failed):
        raise ToleranceNotMet(iteration + 1, float(np.max(residuals[failed])))

    return RootSet(t, x, float(np.max(residuals)))


def interlacing_check(spec: PencilSpec, rs: RootSet) -> bool:
    """
    Check strict interlacing nu_0 > mu_1 > nu_1 > ... > mu_n > nu_n.

    Args:
        spec: Validated pencil.
        rs: Root set computed for spec.

    Returns:
        True if the merged sequence is strictly decreasing.
    """
    if rs.roots.size != spec.n + 1:
        return False

    merged = np.empty(2 * spec.n + 1)
    merged[0::2] = rs.roots
    merged[1::2] = spec.mu
    return bool(np.all(np.diff(merged) < 0.0))


def root_curve(
    spec: PencilSpec,
    t_grid: Sequence[float],
    tol: float = DEFAULT_TOL,
    max_workers: Optional[int] = None
) -> List[RootSet]:
    """
    Compute root sets along an ascending grid of real parameter values.

    Args:
        spec: Validated pencil.
        t_grid: Grid values, sorted ascending.
        tol: Residual tolerance for each solve.
        max_workers: Worker threads for independent grid points.

    Returns:
        One RootSet per grid value, in grid order.

    Raises:
        InputError: If the grid is empty, not finite or not ascending.
        ToleranceNotMet: Propagated from roots_real.
    """
    grid = np.asarray(t_grid, dtype=float).ravel()
    if grid.size == 0:
        raise InputError("Grid must contain at least one value")
    if not np.all(np.isfinite(grid)):
        raise InputError("Grid values must be finite")
    if np.any(np.diff(grid) < 0.0):
        raise InputError("Grid must be sorted ascending")

    manager = ThreadingManager(max_workers)
    curve = manager.execute(lambda value: roots_real(spec, value, tol), grid.tolist())

    if len(curve) > 1:
        stacked = np.array([rs.roots for rs in curve])
        steps = np.diff(stacked, axis=0)
        strict = np.diff(grid) > 0.0
        if np.any(steps[strict] <= 0.0):
            logger.warning("Root branches are not strictly increasing along the grid")

    return curve
