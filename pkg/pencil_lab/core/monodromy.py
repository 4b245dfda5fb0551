"""
Critical values of R, complex root sets and monodromy of the root branches.

For complex t the n + 1 roots of P(z) - tQ(z) are analytic functions of t
away from the critical values t_k = R(zeta_k), R'(zeta_k) = 0. Continuing
the real root set at a real base point t_0 around a loop in the t-plane
relabels the branches; for a counterclockwise loop around all upper critical
values that stays above Im t = -h the relabeling is nu_k -> nu_{k-1}, with
nu_{-1} = nu_n.
"""
import cmath
import logging
import math
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from numpy.polynomial import polynomial as npp

from .errors import (
    AmbiguousMatching,
    InputError,
    InvalidPath,
    LoopConditionViolated,
    NoConvergence,
    PathTooCloseToCritical,
    StepCollapse,
    SymmetryBroken,
)
from .pencil_core import PencilSpec, PolyComplex, eval_R, pencil_poly
from .secular_solver import roots_real

# Set up logger
logger = logging.getLogger(__name__)

ABERTH_TOL = 1e-12
ABERTH_MAX_ITERATIONS = 200
REAL_AXIS_TOL = 1e-10
CONJUGATE_TOL = 1e-8
COINCIDENCE_TOL = 1e-8
CRITICAL_MARGIN = 1e-6
BASE_POINT_TOL = 1e-12
MIN_STEPS = 16
MAX_HALVINGS = 12
NEWTON_ITERATIONS = 30
MATCH_FACTOR = 3.0
CRITICAL_TOL = 1e-14
_EPS = np.finfo(float).eps


def _root_order(roots: np.ndarray) -> np.ndarray:
    return np.lexsort((roots.imag, -roots.real))


def aberth_roots(p: PolyComplex, tol: float = ABERTH_TOL) -> np.ndarray:
    """
    All roots of a polynomial by simultaneous Aberth-Ehrlich iteration.

    Initial guesses are equally spaced on a circle enclosing every root
    (Fujiwara bound), rotated off the real axis. Approximations whose
    backward error |p(z)| <= tol * sum_i |c_i| |z|^i are frozen. Each root
    gets one Newton polish at the end, kept only when it lowers |p|.

    Args:
        p: Polynomial of degree >= 1.
        tol: Backward-error and step tolerance.

    Returns:
        The deg(p) roots, ordered by decreasing real part.

    Raises:
        InputError: If the degree is below 1.
        NoConvergence: If ABERTH_MAX_ITERATIONS iterations do not suffice.
    """
    degree = p.degree
    if degree < 1:
        raise InputError(f"Polynomial degree must be at least 1, got {degree}")

    coeffs = p.coeffs / p.coeffs[-1]
    deriv = npp.polyder(coeffs)
    magnitudes = np.abs(coeffs)

    powers = np.arange(degree, 0, -1)
    radius = 2.0 * float(np.max(magnitudes[degree - powers] ** (1.0 / powers)))
    radius = max(radius, 1e-3)
    angles = 2.0 * math.pi * np.arange(degree) / degree + math.pi / (2.0 * degree)
    z = radius * np.exp(1j * angles)

    frozen = np.zeros(degree, dtype=bool)
    for iteration in range(ABERTH_MAX_ITERATIONS):
        value = npp.polyval(z, coeffs)
        scale = npp.polyval(np.abs(z), magnitudes)
        frozen |= np.abs(value) <= tol * scale
        if np.all(frozen):
            break

        slope = npp.polyval(z, deriv)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        repulsion = np.sum(1.0 / diff, axis=1) - 1.0

        denom = slope - value * repulsion
        with np.errstate(divide="ignore", invalid="ignore"):
            delta = np.where(denom != 0.0, value / denom, 0.0)
        delta[frozen] = 0.0
        z = z - delta

        small_step = np.abs(delta) <= tol * (1.0 + np.abs(z))
        if np.all(frozen | small_step):
            break
    else:
        raise NoConvergence(
            f"Aberth iteration did not converge in {ABERTH_MAX_ITERATIONS} iterations"
        )

    value = npp.polyval(z, coeffs)
    slope = npp.polyval(z, deriv)
    with np.errstate(divide="ignore", invalid="ignore"):
        polished = np.where(slope != 0.0, z - value / slope, z)
    better = np.abs(npp.polyval(polished, coeffs)) < np.abs(value)
    z = np.where(better, polished, z)

    logger.debug(f"Aberth iteration for degree {degree} finished after {iteration + 1} iterations")
    return z[_root_order(z)]


class CriticalData:
    """
    Upper critical points zeta_k of R, their critical values t_k and the strip height h.
    """

    def __init__(self, zeros_upper: np.ndarray, values_upper: np.ndarray):
        self.zeros_upper = np.array(zeros_upper, dtype=complex)
        self.zeros_upper.setflags(write=False)
        self.values_upper = np.array(values_upper, dtype=complex)
        self.values_upper.setflags(write=False)
        self.h = float(np.min(self.values_upper.imag))

    @property
    def all_values(self) -> np.ndarray:
        """Critical values in both half-planes."""
        return np.concatenate((self.values_upper, np.conj(self.values_upper)))

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert to dictionary.

        Returns:
            Dictionary representation of the critical data.
        """
        return {
            "zeros_upper": [[z.real, z.imag] for z in self.zeros_upper.tolist()],
            "values_upper": [[v.real, v.imag] for v in self.values_upper.tolist()],
            "h": self.h,
        }


def _critical_terms(spec: PencilSpec, z: np.ndarray):
    """R'(z), its scale 1 + sum alpha/|z - mu|^2 and the step N/N' for N = Q^2 R'."""
    d = z[:, None] - spec.mu[None, :]
    first = 1.0 + np.sum(spec.alpha / d ** 2, axis=1)
    second = -2.0 * np.sum(spec.alpha / d ** 3, axis=1)
    scale = 1.0 + np.sum(spec.alpha / np.abs(d) ** 2, axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_derivative = 2.0 * np.sum(1.0 / d, axis=1) + second / first
        ratio = np.where(log_derivative != 0.0, 1.0 / log_derivative, 0.0)
    return first, scale, ratio


def _critical_points(spec: PencilSpec, tol: float = CRITICAL_TOL) -> np.ndarray:
    """
    The 2n roots of P'Q - Q'P = Q^2 R' by Aberth iteration in partial-fraction form.

    The polynomial is never expanded: its logarithmic derivative
    2 sum 1/(z - mu) + R''/R' is evaluated from the poles directly. Seeds are
    mu_k +- i sqrt(alpha_k), the critical points of a pencil with the single
    pole mu_k. The seed set is closed under conjugation.

    Raises:
        NoConvergence: If ABERTH_MAX_ITERATIONS iterations do not suffice.
    """
    offsets = 1j * np.sqrt(spec.alpha)
    z = np.concatenate((spec.mu + offsets, spec.mu - offsets))

    frozen = np.zeros(z.size, dtype=bool)
    for iteration in range(ABERTH_MAX_ITERATIONS):
        first, scale, ratio = _critical_terms(spec, z)
        frozen |= np.abs(first) <= tol * scale
        if np.all(frozen):
            break

        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        repulsion = np.sum(1.0 / diff, axis=1) - 1.0
        with np.errstate(divide="ignore", invalid="ignore"):
            denom = 1.0 - ratio * repulsion
            delta = np.where(denom != 0.0, ratio / denom, 0.0)
        delta[frozen] = 0.0
        z = z - delta
        if not np.all(np.isfinite(z)):
            raise NoConvergence("Critical point iteration left the finite plane")

        small_step = np.abs(delta) <= 4.0 * _EPS * (1.0 + np.abs(z))
        if np.all(frozen | small_step):
            break
    else:
        raise NoConvergence(
            f"Critical point iteration did not converge in {ABERTH_MAX_ITERATIONS} iterations"
        )

    # Newton polish on R' itself, kept only where it lowers |R'|
    for _ in range(3):
        d = z[:, None] - spec.mu[None, :]
        first = 1.0 + np.sum(spec.alpha / d ** 2, axis=1)
        second = -2.0 * np.sum(spec.alpha / d ** 3, axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            candidate = np.where(second != 0.0, z - first / second, z)
        d_new = candidate[:, None] - spec.mu[None, :]
        first_new = 1.0 + np.sum(spec.alpha / d_new ** 2, axis=1)
        z = np.where(np.abs(first_new) < np.abs(first), candidate, z)

    logger.debug(f"Critical point iteration for n={spec.n} finished after {iteration + 1} iterations")
    return z


def critical_data(spec: PencilSpec) -> CriticalData:
    """
    Critical points and values of R in the upper half-plane.

    The critical points are the roots of P'Q - Q'P, a monic real polynomial of
    degree 2n that is strictly positive on the real axis; they come in n
    conjugate pairs.

    Args:
        spec: Validated pencil.

    Returns:
        CriticalData with h = min Im t_k.

    Raises:
        SymmetryBroken: If the roots do not split into n conjugate pairs off the real axis.
        NoConvergence: Propagated from the critical point iteration.
    """
    roots = _critical_points(spec)
    upper = roots[roots.imag > REAL_AXIS_TOL]
    lower = roots[roots.imag < -REAL_AXIS_TOL]
    if upper.size != spec.n or lower.size != spec.n:
        raise SymmetryBroken(
            f"Expected {spec.n} critical points in each half-plane, "
            f"found {upper.size} above and {lower.size} below",
            upper_count=int(upper.size),
        )

    mismatch = max(float(np.min(np.abs(lower - np.conj(zeta)))) for zeta in upper)
    if mismatch > CONJUGATE_TOL:
        raise SymmetryBroken(f"Critical points are not conjugate pairs (mismatch {mismatch:.3e})")

    upper = upper[_root_order(upper)]
    values = np.array([eval_R(spec, zeta) for zeta in upper])

    if values.size > 1:
        gaps = np.abs(values[:, None] - values[None, :]) + np.eye(values.size)
        if np.min(gaps) <= COINCIDENCE_TOL:
            logger.warning("Some critical values coincide; partial-loop permutations are undefined")

    data = CriticalData(upper, values)
    if data.h <= 0.0:
        raise SymmetryBroken(f"Upper critical value with Im t <= 0 (h = {data.h!r})")
    return data


def strip_height(spec: PencilSpec) -> float:
    """
    Height h of the strip |Im t| < h free of critical values.

    Args:
        spec: Validated pencil.

    Returns:
        min Im t_k over the upper critical values.
    """
    return critical_data(spec).h


def roots_at_complex_t(spec: PencilSpec, t: complex) -> np.ndarray:
    """
    The n + 1 roots of P(z) - tQ(z) for a complex parameter.

    Args:
        spec: Validated pencil.
        t: Complex parameter.

    Returns:
        Roots ordered by decreasing real part.
    """
    t = complex(t)
    roots = aberth_roots(pencil_poly(spec, t))
    if t.imag > 0.0 and np.any(roots.imag <= 0.0):
        logger.warning(f"Root outside the upper half-plane for t={t}")
    return roots


class PathSpec:
    """
    A path t(s), 0 <= s <= 1, in the parameter plane: a circle or a polyline.
    """

    def __init__(
        self,
        kind: str,
        steps: int,
        center: complex = 0j,
        radius: float = 0.0,
        orientation: int = 1,
        base_angle: Optional[float] = None,
        turns: int = 1,
        vertices: Optional[Sequence[complex]] = None
    ):
        """
        Initialize path. Use PathSpec.circle or PathSpec.polyline.

        Raises:
            InvalidPath: If the parameters do not describe a valid path.
        """
        if steps < MIN_STEPS:
            raise InvalidPath(f"Paths need at least {MIN_STEPS} steps, got {steps}")
        self.kind = kind
        self.steps = int(steps)

        if kind == "circle":
            if not radius > 0.0:
                raise InvalidPath(f"Circle radius must be positive, got {radius!r}")
            if orientation not in (1, -1):
                raise InvalidPath(f"Orientation must be +1 or -1, got {orientation!r}")
            if turns < 1:
                raise InvalidPath(f"Turn count must be positive, got {turns}")
            self.center = complex(center)
            self.radius = float(radius)
            self.orientation = int(orientation)
            self.turns = int(turns)
            self.base_angle = self._default_base_angle() if base_angle is None else float(base_angle)
            self.vertices = None
        elif kind == "polyline":
            points = np.asarray(vertices if vertices is not None else [], dtype=complex)
            if points.size < 2:
                raise InvalidPath("Polylines need at least two vertices")
            lengths = np.abs(np.diff(points))
            if np.any(lengths == 0.0):
                raise InvalidPath("Consecutive polyline vertices must differ")
            self.vertices = points
            self._cumulative = np.concatenate(([0.0], np.cumsum(lengths))) / np.sum(lengths)
        else:
            raise InvalidPath(f"Unknown path kind {kind!r}")

    @classmethod
    def circle(
        cls,
        center: complex,
        radius: float,
        steps: int = 256,
        orientation: int = 1,
        base_angle: Optional[float] = None,
        turns: int = 1
    ) -> "PathSpec":
        """
        Circle t(s) = center + radius exp(i (base_angle + 2 pi orientation turns s)).

        Without a base angle the base point is the right-hand crossing of the
        real axis when the circle meets it, else the lowest point.
        """
        return cls("circle", steps, center=center, radius=radius, orientation=orientation,
                   base_angle=base_angle, turns=turns)

    @classmethod
    def polyline(cls, vertices: Sequence[complex], steps: int = 256) -> "PathSpec":
        """Piecewise linear path through the vertices, parametrised by arc length."""
        return cls("polyline", steps, vertices=vertices)

    def _default_base_angle(self) -> float:
        ratio = -self.center.imag / self.radius
        if abs(ratio) <= 1.0:
            return math.asin(ratio)
        return -math.pi / 2.0

    def point(self, s: float) -> complex:
        """Return t(s)."""
        if self.kind == "circle":
            angle = self.base_angle + 2.0 * math.pi * self.orientation * self.turns * s
            return self.center + self.radius * cmath.exp(1j * angle)

        k = int(np.searchsorted(self._cumulative, s, side="right") - 1)
        k = min(max(k, 0), self.vertices.size - 2)
        width = self._cumulative[k + 1] - self._cumulative[k]
        local = (s - self._cumulative[k]) / width
        return complex(self.vertices[k] + local * (self.vertices[k + 1] - self.vertices[k]))

    @property
    def base_point(self) -> complex:
        return self.point(0.0)

    @property
    def is_closed(self) -> bool:
        if self.kind == "circle":
            return True
        return abs(self.vertices[-1] - self.vertices[0]) <= BASE_POINT_TOL

    def min_imag(self) -> float:
        if self.kind == "circle":
            return self.center.imag - self.radius
        return float(np.min(self.vertices.imag))

    def distance_to(self, c: complex) -> float:
        """Distance from a point to the path."""
        if self.kind == "circle":
            return abs(abs(c - self.center) - self.radius)

        start = self.vertices[:-1]
        direction = np.diff(self.vertices)
        u = np.clip(((c - start) * np.conj(direction)).real / np.abs(direction) ** 2, 0.0, 1.0)
        return float(np.min(np.abs(start + u * direction - c)))

    def winding_number(self, c: complex) -> int:
        """Winding number of a closed path around a point off the path."""
        if self.kind == "circle":
            if abs(c - self.center) < self.radius:
                return self.orientation * self.turns
            return 0
        angles = np.angle((self.vertices[1:] - c) / (self.vertices[:-1] - c))
        return int(round(float(np.sum(angles)) / (2.0 * math.pi)))

    @property
    def orientation_sign(self) -> int:
        """+1 for counterclockwise, -1 for clockwise."""
        if self.kind == "circle":
            return self.orientation
        x, y = self.vertices.real, self.vertices.imag
        area = 0.5 * float(np.sum(x[:-1] * y[1:] - x[1:] * y[:-1]))
        return 1 if area >= 0.0 else -1

    def reversed(self) -> "PathSpec":
        """The same path traversed backwards from the same base point."""
        if self.kind == "circle":
            return PathSpec.circle(self.center, self.radius, self.steps, -self.orientation,
                                   self.base_angle, self.turns)
        return PathSpec.polyline(self.vertices[::-1], self.steps)

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert to dictionary.

        Returns:
            Dictionary representation of the path.
        """
        if self.kind == "circle":
            return {
                "kind": self.kind,
                "center": [self.center.real, self.center.imag],
                "radius": self.radius,
                "orientation": self.orientation,
                "base_angle": self.base_angle,
                "turns": self.turns,
                "steps": self.steps,
            }
        return {
            "kind": self.kind,
            "vertices": [[v.real, v.imag] for v in self.vertices.tolist()],
            "steps": self.steps,
        }


class ContinuationTrace:
    """
    Positions of every branch at each accepted continuation step.
    """

    def __init__(self, s: List[float], t: List[complex], z: List[np.ndarray]):
        self.s = np.array(s, dtype=float)
        self.t = np.array(t, dtype=complex)
        self.z = np.array(z, dtype=complex).T

    @property
    def branches(self) -> List[np.ndarray]:
        return [row for row in self.z]

    @property
    def endpoints(self) -> np.ndarray:
        return self.z[:, -1]


def _min_pair_distance(z: np.ndarray) -> float:
    if z.size < 2:
        return math.inf
    gaps = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(gaps, math.inf)
    return float(np.min(gaps))


def _newton_secular(spec: PencilSpec, z: np.ndarray, t: complex):
    """Newton on R(z) - t for every branch; returns (positions, converged)."""
    z = z.copy()
    for _ in range(NEWTON_ITERATIONS):
        d = z[:, None] - spec.mu[None, :]
        value = z - np.sum(spec.alpha / d, axis=1) - t
        slope = 1.0 + np.sum(spec.alpha / d ** 2, axis=1)
        step = value / slope
        z = z - step
        if not np.all(np.isfinite(z)):
            return z, False
        if np.all(np.abs(step) <= 1e-14 * (1.0 + np.abs(z))):
            return z, True
    return z, False


def _check_clearance(path: PathSpec, crit: CriticalData) -> float:
    closest = math.inf
    for value in crit.all_values:
        distance = path.distance_to(complex(value))
        if distance < CRITICAL_MARGIN:
            raise PathTooCloseToCritical(complex(value), distance)
        closest = min(closest, distance)
    return closest


def continue_branches(
    spec: PencilSpec,
    path: PathSpec,
    start: Sequence[complex],
    crit: Optional[CriticalData] = None
) -> ContinuationTrace:
    """
    Continue root branches of R(z) = t(s) along a path.

    Each step predicts along the tangent dz = dt / R'(z) and corrects with
    Newton on R(z) - t. A step is accepted when every branch moved by less
    than a third of the smallest distance between current branch positions;
    otherwise it is halved.

    Args:
        spec: Validated pencil.
        path: Path in the parameter plane.
        start: Roots at the path's base point.
        crit: Critical data of spec, computed when not given.

    Returns:
        ContinuationTrace including both endpoints.

    Raises:
        PathTooCloseToCritical: If the path passes within 1e-6 of a critical value.
        StepCollapse: If MAX_HALVINGS halvings do not produce an acceptable step.
    """
    if crit is None:
        crit = critical_data(spec)
    _check_clearance(path, crit)

    z = np.asarray(start, dtype=complex).copy()
    s = 0.0
    s_values = [0.0]
    t_values = [path.point(0.0)]
    positions = [z.copy()]
    nominal = 1.0 / path.steps

    while s < 1.0:
        ds = min(nominal, 1.0 - s)
        limit = _min_pair_distance(z) / 3.0
        slope = 1.0 + np.sum(spec.alpha / (z[:, None] - spec.mu[None, :]) ** 2, axis=1)
        for halving in range(MAX_HALVINGS + 1):
            s_next = 1.0 if s + ds >= 1.0 - 1e-15 else s + ds
            t_next = path.point(s_next)
            with np.errstate(divide="ignore", invalid="ignore"):
                predicted = z + (t_next - t_values[-1]) / slope
            if not np.all(np.isfinite(predicted)):
                predicted = z
            candidate, converged = _newton_secular(spec, predicted, t_next)
            if converged and np.all(np.abs(candidate - z) < limit):
                break
            ds *= 0.5
        else:
            raise StepCollapse(s, MAX_HALVINGS)

        z = candidate
        s = s_next
        s_values.append(s)
        t_values.append(t_next)
        positions.append(z.copy())

    logger.debug(f"Continuation finished with {len(s_values) - 1} accepted steps")
    return ContinuationTrace(s_values, t_values, positions)


class MonodromyResult:
    """
    Branch permutation produced by continuing the real root set around a loop.
    """

    def __init__(
        self,
        permutation: List[int],
        closure_error: float,
        path_min_crit_dist: float,
        windings: List[int],
        orientation: int,
        expected: Optional[List[int]],
        base_point: float
    ):
        """
        Initialize monodromy result.

        Args:
            permutation: permutation[k] = index of the start root branch k ends on.
            closure_error: Max distance between an endpoint and its matched start root.
            path_min_crit_dist: Closest approach of the loop to a critical value.
            windings: Winding number of the loop around each upper critical value.
            orientation: +1 counterclockwise, -1 clockwise.
            expected: Permutation predicted from the windings, or None for partial loops.
            base_point: Real base point t_0.
        """
        self.permutation = list(permutation)
        self.closure_error = float(closure_error)
        self.path_min_crit_dist = float(path_min_crit_dist)
        self.windings = list(windings)
        self.orientation = int(orientation)
        self.expected = None if expected is None else list(expected)
        self.base_point = float(base_point)

    @property
    def matches_expected(self) -> Optional[bool]:
        if self.expected is None:
            return None
        return self.permutation == self.expected

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert to dictionary.

        Returns:
            Dictionary representation of the monodromy result.
        """
        return {
            "base_point": self.base_point,
            "permutation": self.permutation,
            "closure_error": self.closure_error,
            "path_min_crit_dist": self.path_min_crit_dist,
            "windings": self.windings,
            "orientation": self.orientation,
            "expected": self.expected,
            "matches_expected": self.matches_expected,
        }


def cyclic_shift(size: int, winding: int) -> List[int]:
    """Permutation k -> k - winding (mod size)."""
    return [(k - winding) % size for k in range(size)]


def compose_permutations(first: Sequence[int], second: Sequence[int]) -> List[int]:
    """Permutation of traversing first, then second."""
    return [second[first[k]] for k in range(len(first))]


def _match_endpoints(endpoints: np.ndarray, start: np.ndarray):
    permutation = []
    best_distances = []
    for k, point in enumerate(endpoints):
        distances = np.abs(start - point)
        order = np.argsort(distances)
        best = float(distances[order[0]])
        runner_up = float(distances[order[1]]) if distances.size > 1 else math.inf
        if runner_up < MATCH_FACTOR * best:
            raise AmbiguousMatching(
                f"Endpoint of branch {k} is not clearly closest to one start root",
                [best, runner_up],
            )
        permutation.append(int(order[0]))
        best_distances.append(best)

    if sorted(permutation) != list(range(len(start))):
        raise AmbiguousMatching(f"Endpoint matching {permutation} is not a bijection", best_distances)
    return permutation, max(best_distances)


def loop_monodromy(spec: PencilSpec, loop: PathSpec) -> MonodromyResult:
    """
    Permutation of the real root branches induced by a closed loop.

    Hard conditions: the loop is closed, its base point is real and it stays
    in Im t > -h. Whether it encloses every upper critical value, and its
    orientation, are recorded; the expected permutation is the cyclic shift
    by the common winding number when all windings agree, and None otherwise.

    Args:
        spec: Validated pencil.
        loop: Closed path with a real base point.

    Returns:
        MonodromyResult; permutation[k] = j means nu_k continues into nu_j.

    Raises:
        LoopConditionViolated: If a hard loop condition fails.
        PathTooCloseToCritical: If the loop passes within 1e-6 of a critical value.
        StepCollapse: Propagated from continue_branches.
        AmbiguousMatching: If endpoints cannot be matched unambiguously.
    """
    crit = critical_data(spec)
    if not loop.is_closed:
        raise LoopConditionViolated("Loop is not closed")

    t0 = loop.base_point
    if abs(t0.imag) > BASE_POINT_TOL:
        raise LoopConditionViolated(f"Loop base point {t0!r} is not real")
    if loop.min_imag() <= -crit.h + CRITICAL_MARGIN:
        raise LoopConditionViolated(
            f"Loop reaches Im t = {loop.min_imag():.6f}, below -h = {-crit.h:.6f}"
        )

    clearance = _check_clearance(loop, crit)
    windings = [loop.winding_number(complex(value)) for value in crit.values_upper]

    size = spec.n + 1
    if len(set(windings)) == 1:
        expected = cyclic_shift(size, windings[0])
    else:
        expected = None
        logger.warning(
            f"Loop winds {windings} around the upper critical values; permutation is reported, not predicted"
        )

    start = roots_real(spec, t0.real).roots.astype(complex)
    trace = continue_branches(spec, loop, start, crit)
    permutation, closure = _match_endpoints(trace.endpoints, start)

    result = MonodromyResult(
        permutation, closure, clearance, windings, loop.orientation_sign, expected, t0.real
    )
    if result.matches_expected is False:
        logger.warning(f"Permutation {permutation} differs from expected {expected}")
    logger.info(f"Loop monodromy permutation {permutation}, closure error {closure:.3e}")
    return result
