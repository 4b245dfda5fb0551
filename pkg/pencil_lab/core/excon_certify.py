"""
Exponential convexity checks.

A function f on (a, b) is exponentially convex when every Gram matrix
[f(t_r + t_s)] with all sums inside (a, b) is positive semidefinite. The
checks here sample point sets and report the worst Gram matrix found: a
pass means no counterexample was found, not a proof.
"""
import logging
import math
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainViolation, InputError, InvalidMeasure
from .gram import DEFAULT_PSD_TOL, GramReport, gram_matrix, psd_verdict
from .pencil_core import PencilSpec
from .secular_solver import roots_real
from .trace_exp import sum_exp_roots
from ..utils.threading import ThreadingManager

# Set up logger
logger = logging.getLogger(__name__)

MAX_CERTIFY_POINTS = 16
INFINITE_RANGE = 5.0

__all__ = [
    "GramReport", "QuadratureMeasure", "gram_matrix", "psd_verdict", "certify_excon",
    "g_txi", "gaussian_measure", "point_mass", "F_compose", "composed_sum",
    "scale_report", "add_reports", "multiply_reports",
]


class QuadratureMeasure:
    """
    Discrete nonnegative measure sum_j w_j delta(xi - xi_j).
    """

    def __init__(self, nodes: Sequence[float], weights: Sequence[float]):
        """
        Initialize quadrature measure.

        Args:
            nodes: Finite node locations.
            weights: Nonnegative weights, one per node.

        Raises:
            InvalidMeasure: If lengths differ, a node is not finite or a weight is negative.
        """
        nodes_arr = np.asarray(nodes, dtype=float).ravel()
        weights_arr = np.asarray(weights, dtype=float).ravel()
        if nodes_arr.size != weights_arr.size:
            raise InvalidMeasure(
                f"Measure has {nodes_arr.size} nodes but {weights_arr.size} weights"
            )
        if nodes_arr.size == 0:
            raise InvalidMeasure("Measure needs at least one node")
        if not np.all(np.isfinite(nodes_arr)):
            raise InvalidMeasure("Measure nodes must be finite")
        if not np.all(weights_arr >= 0.0):
            raise InvalidMeasure("Measure weights must be nonnegative")

        self.nodes = nodes_arr
        self.nodes.setflags(write=False)
        self.weights = weights_arr
        self.weights.setflags(write=False)

    @property
    def total_mass(self) -> float:
        return float(np.sum(self.weights))

    def laplace(self, x: float) -> float:
        """Return sum_j w_j exp(xi_j x)."""
        return float(self.weights @ np.exp(self.nodes * x))


def point_mass(xi: float, weight: float = 1.0) -> QuadratureMeasure:
    """Measure with a single node."""
    return QuadratureMeasure([xi], [weight])


def _draw_range(a: float, b: float) -> Tuple[float, float]:
    lower = a / 2.0 if math.isfinite(a) else -INFINITE_RANGE
    upper = b / 2.0 if math.isfinite(b) else INFINITE_RANGE
    if not math.isfinite(a):
        lower = min(lower, upper - 2.0 * INFINITE_RANGE)
    if not math.isfinite(b):
        upper = max(upper, lower + 2.0 * INFINITE_RANGE)
    return lower, upper


def certify_excon(
    f: Callable[[float], float],
    a: float = -math.inf,
    b: float = math.inf,
    N: int = 8,
    trials: int = 50,
    seed: int = 42,
    tol: float = DEFAULT_PSD_TOL,
    max_workers: Optional[int] = None
) -> GramReport:
    """
    Search for a non-PSD Gram matrix of f on random point sets.

    Trial 0 uses N points; later trials draw their size uniformly from 1..N.
    Points come from (a/2, b/2) so every pairwise sum lies in (a, b); an
    infinite end is replaced by a window of width 10 ([-5, 5] when both ends
    are infinite). All point sets are drawn before evaluation so the outcome
    does not depend on the number of workers.

    Args:
        f: Scalar function on (a, b).
        a: Lower end of the interval.
        b: Upper end of the interval.
        N: Maximal number of points per trial, at most 16.
        trials: Number of point sets.
        seed: Seed of the random stream.
        tol: Relative PSD tolerance.
        max_workers: Worker threads for independent trials.

    Returns:
        The report with the smallest min_eig; ties keep the earliest trial.

    Raises:
        InputError: If a >= b, N is out of range or trials < 1.
        DomainViolation: Propagated from gram_matrix or from f.
    """
    if not a < b:
        raise InputError(f"Interval ({a!r}, {b!r}) is empty")
    if not 1 <= N <= MAX_CERTIFY_POINTS:
        raise InputError(f"Point count must be in 1..{MAX_CERTIFY_POINTS}, got {N}")
    if trials < 1:
        raise InputError(f"Trial count must be positive, got {trials}")

    rng = np.random.default_rng(seed)
    lower, upper = _draw_range(a, b)
    point_sets = []
    for trial in range(trials):
        size = N if trial == 0 else int(rng.integers(1, N + 1))
        point_sets.append(np.sort(rng.uniform(lower, upper, size)))

    def run_trial(points: np.ndarray) -> GramReport:
        return psd_verdict(gram_matrix(f, points, (a, b)), tol)

    reports = ThreadingManager(max_workers).execute(run_trial, point_sets)

    worst = reports[0]
    for report in reports[1:]:
        if report.min_eig < worst.min_eig:
            worst = report

    logger.info(
        f"Certification over {trials} trials: worst min_eig={worst.min_eig:.3e}, verdict={worst.verdict}"
    )
    return worst


def g_txi(spec: PencilSpec, t: float, xi: float) -> float:
    """
    g(t, xi) = sum_k exp(xi nu_k(t)), exponentially convex in t for each real xi.

    Args:
        spec: Validated pencil.
        t: Real parameter.
        xi: Real exponent scale.

    Returns:
        The value of g.
    """
    return sum_exp_roots(spec, t, xi)


def gaussian_measure(gamma: float, half_width: float = 12.0, count: int = 2001) -> QuadratureMeasure:
    """
    Trapezoidal discretisation of sigma(dxi) = exp(-xi^2 / (4 gamma)) / (2 sqrt(pi gamma)) dxi.

    Its Laplace transform is exp(gamma x^2).

    Args:
        gamma: Positive scale.
        half_width: Nodes cover [-half_width, half_width].
        count: Number of equally spaced nodes, at least 2.

    Returns:
        QuadratureMeasure with symmetric nodes and weights.

    Raises:
        InputError: If gamma <= 0, half_width <= 0 or count < 2.
    """
    if gamma <= 0:
        raise InputError(f"gamma must be positive, got {gamma!r}")
    if half_width <= 0:
        raise InputError(f"half_width must be positive, got {half_width!r}")
    if count < 2:
        raise InputError(f"count must be at least 2, got {count}")

    nodes = np.linspace(-half_width, half_width, count)
    step = nodes[1] - nodes[0]
    density = np.exp(-nodes ** 2 / (4.0 * gamma)) / (2.0 * math.sqrt(math.pi * gamma))
    trapezoid = np.full(count, step)
    trapezoid[0] = trapezoid[-1] = 0.5 * step
    return QuadratureMeasure(nodes, density * trapezoid)


def F_compose(spec: PencilSpec, measure: QuadratureMeasure, t: float) -> float:
    """
    F(t) = sum_j w_j g(t, xi_j), the discretised integral of g(t, xi) over sigma.

    The roots at t are computed once and shared by all nodes.

    Args:
        spec: Validated pencil.
        measure: Nonnegative quadrature measure.
        t: Real parameter.

    Returns:
        The value of F.
    """
    roots = roots_real(spec, t).roots
    g_values = np.sum(np.exp(np.outer(measure.nodes, roots)), axis=1)
    return float(measure.weights @ g_values)


def composed_sum(
    spec: PencilSpec,
    f: Callable[[np.ndarray], np.ndarray],
    u: float = -math.inf,
    v: float = math.inf
) -> Callable[[float], float]:
    """
    Build t -> sum_k f(nu_k(t)) restricted to roots inside (u, v).

    Args:
        spec: Validated pencil.
        f: Vectorised scalar function declared on (u, v).
        u: Lower end of the root window.
        v: Upper end of the root window.

    Returns:
        Callable that raises DomainViolation when a root leaves (u, v).
    """
    def F(t: float) -> float:
        roots = roots_real(spec, t).roots
        outside = roots[(roots <= u) | (roots >= v)]
        if outside.size:
            raise DomainViolation(float(outside[0]), u, v)
        return float(np.sum(f(roots)))

    return F


def _same_points(first: GramReport, second: GramReport) -> None:
    if first.points.shape != second.points.shape or not np.array_equal(first.points, second.points):
        raise InputError("Gram reports must share the same point set")


def scale_report(report: GramReport, c: float) -> GramReport:
    """Gram report of c * f for c >= 0; the verdict is left unfilled."""
    if c < 0:
        raise InputError(f"Scale factor must be nonnegative, got {c!r}")
    return GramReport(report.points, c * report.gram)


def add_reports(first: GramReport, second: GramReport) -> GramReport:
    """Gram report of f1 + f2 on a shared point set; the verdict is left unfilled."""
    _same_points(first, second)
    return GramReport(first.points, first.gram + second.gram)


def multiply_reports(first: GramReport, second: GramReport) -> GramReport:
    """Gram report of f1 * f2 (entrywise product) on a shared point set; the verdict is left unfilled."""
    _same_points(first, second)
    return GramReport(first.points, first.gram * second.gram)
