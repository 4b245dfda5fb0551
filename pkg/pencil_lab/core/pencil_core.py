"""
Pencil data and the polynomials R, Q, P and P - tQ built from it.

A pencil is fixed by poles mu_1 > ... > mu_n and positive residues
alpha_1, ..., alpha_n. They define

    R(z) = z - sum_k alpha_k / (z - mu_k) = P(z) / Q(z),

with Q(z) = prod_k (z - mu_k) monic of degree n and
P(z) = z Q(z) - sum_k alpha_k Q_k(z) monic of degree n + 1, where
Q_k(z) = Q(z) / (z - mu_k).
"""
import logging
from typing import Any, Dict, Sequence, Union

import numpy as np
from numpy.polynomial import polynomial as npp

from .errors import DuplicatePole, EmptySpec, NonpositiveWeight, PoleHit, SpecTooLarge

# Set up logger
logger = logging.getLogger(__name__)

MAX_POLES = 64
DUPLICATE_POLE_TOL = 1e-12
POLE_HIT_TOL = 1e-14


def _frozen(values: np.ndarray) -> np.ndarray:
    values.setflags(write=False)
    return values


class PencilSpec:
    """
    Validated pencil data with poles sorted strictly decreasing.

    Instances are built by new_pencil and never mutated afterwards.
    """

    def __init__(self, mu: np.ndarray, alpha: np.ndarray):
        self._mu = _frozen(np.array(mu, dtype=float))
        self._alpha = _frozen(np.array(alpha, dtype=float))

    @property
    def mu(self) -> np.ndarray:
        return self._mu

    @property
    def alpha(self) -> np.ndarray:
        return self._alpha

    @property
    def n(self) -> int:
        return int(self._mu.size)

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert to dictionary.

        Returns:
            Dictionary representation of the pencil.
        """
        return {
            "n": self.n,
            "mu": self._mu.tolist(),
            "alpha": self._alpha.tolist(),
        }

    def __repr__(self) -> str:
        return f"PencilSpec(mu={self._mu.tolist()}, alpha={self._alpha.tolist()})"


class PolyReal:
    """Real polynomial with coefficients in ascending degree order."""

    def __init__(self, coeffs: Sequence[float]):
        self._coeffs = _frozen(npp.polytrim(np.asarray(coeffs, dtype=float)))

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def degree(self) -> int:
        return int(self._coeffs.size - 1)

    def __call__(self, z: Union[complex, np.ndarray]) -> Union[complex, np.ndarray]:
        return npp.polyval(z, self._coeffs)

    def derivative(self) -> "PolyReal":
        return PolyReal(npp.polyder(self._coeffs))

    def __repr__(self) -> str:
        return f"PolyReal({self._coeffs.tolist()})"


class PolyComplex:
    """Complex polynomial with coefficients in ascending degree order, trailing zeros trimmed."""

    def __init__(self, coeffs: Sequence[complex]):
        self._coeffs = _frozen(npp.polytrim(np.asarray(coeffs, dtype=complex)))

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def degree(self) -> int:
        return int(self._coeffs.size - 1)

    def __call__(self, z: Union[complex, np.ndarray]) -> Union[complex, np.ndarray]:
        return npp.polyval(z, self._coeffs)

    def derivative(self) -> "PolyComplex":
        return PolyComplex(npp.polyder(self._coeffs))

    def __repr__(self) -> str:
        return f"PolyComplex({self._coeffs.tolist()})"


def new_pencil(mu: Sequence[float], alpha: Sequence[float]) -> PencilSpec:
    """
    Validate pencil data and sort it by decreasing pole.

    Args:
        mu: Poles, in any order.
        alpha: Residues, aligned with mu.

    Returns:
        PencilSpec with mu strictly decreasing and alpha permuted alongside.

    Raises:
        EmptySpec: If no poles are given.
        SpecTooLarge: If more than MAX_POLES poles are given.
        ValueError: If mu and alpha differ in length or contain non-finite values.
        NonpositiveWeight: If a residue is not strictly positive.
        DuplicatePole: If two poles agree within DUPLICATE_POLE_TOL.
    """
    mu_arr = np.asarray(mu, dtype=float).ravel()
    alpha_arr = np.asarray(alpha, dtype=float).ravel()

    if mu_arr.size == 0:
        raise EmptySpec()
    if mu_arr.size != alpha_arr.size:
        raise ValueError(f"mu has {mu_arr.size} entries but alpha has {alpha_arr.size}")
    if mu_arr.size > MAX_POLES:
        raise SpecTooLarge(int(mu_arr.size), MAX_POLES)
    if not (np.all(np.isfinite(mu_arr)) and np.all(np.isfinite(alpha_arr))):
        raise ValueError("mu and alpha must be finite")

    for index, value in enumerate(alpha_arr):
        if value <= 0.0:
            raise NonpositiveWeight(index, float(value))

    order = np.argsort(-mu_arr, kind="stable")
    mu_sorted = mu_arr[order]
    alpha_sorted = alpha_arr[order]

    gaps = mu_sorted[:-1] - mu_sorted[1:]
    close = np.flatnonzero(gaps <= DUPLICATE_POLE_TOL)
    if close.size:
        k = int(close[0])
        raise DuplicatePole(float(mu_sorted[k]), float(mu_sorted[k + 1]))

    spec = PencilSpec(mu_sorted, alpha_sorted)
    logger.debug(f"Created pencil with n={spec.n}")
    return spec


def eval_R(spec: PencilSpec, z: complex) -> complex:
    """
    Evaluate R(z) = z - sum_k alpha_k / (z - mu_k) in partial-fraction form.

    Args:
        spec: Validated pencil.
        z: Evaluation point.

    Returns:
        R(z) as a complex number.

    Raises:
        PoleHit: If z lies within POLE_HIT_TOL of a pole.
    """
    z = complex(z)
    d = z - spec.mu
    k = int(np.argmin(np.abs(d)))
    if abs(d[k]) <= POLE_HIT_TOL:
        raise PoleHit(z, float(spec.mu[k]))
    return complex(z - np.sum(spec.alpha / d))


def eval_R_derivative(spec: PencilSpec, z: complex) -> complex:
    """Evaluate R'(z) = 1 + sum_k alpha_k / (z - mu_k)^2."""
    z = complex(z)
    d = z - spec.mu
    k = int(np.argmin(np.abs(d)))
    if abs(d[k]) <= POLE_HIT_TOL:
        raise PoleHit(z, float(spec.mu[k]))
    return complex(1.0 + np.sum(spec.alpha / d ** 2))


def poly_Q(spec: PencilSpec) -> PolyReal:
    """
    Build Q(z) = prod_k (z - mu_k).

    Args:
        spec: Validated pencil.

    Returns:
        Monic polynomial of degree n whose roots are the poles.
    """
    return PolyReal(npp.polyfromroots(spec.mu))


def poly_Qk(spec: PencilSpec, k: int) -> PolyReal:
    """Build Q_k(z) = Q(z) / (z - mu_k) for a zero-based pole index k."""
    return PolyReal(npp.polyfromroots(np.delete(spec.mu, k)))


def poly_P(spec: PencilSpec) -> PolyReal:
    """
    Build P(z) = z Q(z) - sum_k alpha_k Q_k(z).

    Args:
        spec: Validated pencil.

    Returns:
        Monic polynomial of degree n + 1 sharing no root with Q.
    """
    q = npp.polyfromroots(spec.mu)
    correction = np.zeros(spec.n)
    for k in range(spec.n):
        correction = npp.polyadd(correction, spec.alpha[k] * poly_Qk(spec, k).coeffs)
    return PolyReal(npp.polysub(npp.polymulx(q), correction))


def pencil_poly(spec: PencilSpec, t: complex) -> PolyComplex:
    """
    Build the coefficients of P(z) - t Q(z).

    Args:
        spec: Validated pencil.
        t: Pencil parameter, real or complex.

    Returns:
        Monic complex polynomial of degree n + 1.
    """
    p = poly_P(spec).coeffs.astype(complex)
    q = poly_Q(spec).coeffs.astype(complex)
    return PolyComplex(npp.polysub(p, complex(t) * q))
