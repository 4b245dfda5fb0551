"""
Exception hierarchy for Pencil Lab.

Input errors describe bad data handed to the library; numerical errors
describe an iteration that did not reach its target. The CLI maps both to
exit code 2.
"""
from typing import Optional, Sequence


class PencilLabError(Exception):
    """Base exception for Pencil Lab errors."""
    pass


class InputError(PencilLabError):
    """Raised when the caller supplies data outside an operation's contract."""
    pass


class NumericalError(PencilLabError):
    """Raised when an iterative method fails to meet its target."""
    pass


class EmptySpec(InputError):
    """Exception raised when a pencil has no poles."""
    def __init__(self):
        super().__init__("Pencil needs at least one pole")


class SpecTooLarge(InputError):
    """Exception raised when a pencil has more poles than supported."""
    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"Pencil has {n} poles, at most {limit} are supported")


class DuplicatePole(InputError):
    """Exception raised when two poles coincide."""
    def __init__(self, first: float, second: float):
        self.first = first
        self.second = second
        super().__init__(f"Poles {first!r} and {second!r} coincide")


class NonpositiveWeight(InputError):
    """Exception raised when a residue is not strictly positive."""
    def __init__(self, index: int, value: float):
        self.index = index
        self.value = value
        super().__init__(f"Residue alpha[{index}] = {value!r} must be positive")


class PoleHit(InputError):
    """Exception raised when R is evaluated on one of its poles."""
    def __init__(self, z: complex, pole: float):
        self.z = z
        self.pole = pole
        super().__init__(f"Point {z!r} coincides with pole {pole!r}")


class NotSymmetric(InputError):
    """Exception raised when a matrix is expected to be symmetric."""
    def __init__(self, asymmetry: float):
        self.asymmetry = asymmetry
        super().__init__(f"Matrix is not symmetric (max |M - M^T| = {asymmetry:.3e})")


class SizeMismatch(InputError):
    """Exception raised when matrix sizes do not agree."""
    def __init__(self, first: int, second: int):
        self.first = first
        self.second = second
        super().__init__(f"Matrix sizes {first} and {second} differ")


class HypothesisViolated(InputError):
    """Exception raised when the inputs of the entrywise check break its hypotheses."""
    pass


class DomainViolation(InputError):
    """Exception raised when a function is sampled outside its interval."""
    def __init__(self, value: float, lower: float, upper: float):
        self.value = value
        self.lower = lower
        self.upper = upper
        super().__init__(f"Value {value!r} lies outside the open interval ({lower!r}, {upper!r})")


class InvalidMeasure(InputError):
    """Exception raised for malformed quadrature measures."""
    pass


class InvalidPath(InputError):
    """Exception raised for malformed continuation paths."""
    pass


class PathTooCloseToCritical(InputError):
    """Exception raised when a path passes too close to a critical value."""
    def __init__(self, critical_value: complex, distance: float):
        self.critical_value = critical_value
        self.distance = distance
        super().__init__(
            f"Path passes within {distance:.3e} of critical value {critical_value!r}"
        )


class LoopConditionViolated(InputError):
    """Exception raised when a loop does not satisfy the monodromy loop conditions."""
    pass


class ToleranceNotMet(NumericalError):
    """Exception raised when a root solve exhausts its iteration budget."""
    def __init__(self, iterations: int, residual: Optional[float] = None):
        self.iterations = iterations
        self.residual = residual
        message = f"Tolerance not met after {iterations} iterations"
        if residual is not None:
            message += f" (residual {residual:.3e})"
        super().__init__(message)


class NoConvergence(NumericalError):
    """Exception raised when an eigen or polynomial iteration does not converge."""
    pass


class SymmetryBroken(NumericalError):
    """Exception raised when critical points fail the conjugate-pair structure."""
    def __init__(self, message: str, upper_count: Optional[int] = None):
        self.upper_count = upper_count
        super().__init__(message)


class StepCollapse(NumericalError):
    """Exception raised when path continuation cannot find an acceptable step."""
    def __init__(self, s: float, halvings: int):
        self.s = s
        self.halvings = halvings
        super().__init__(f"Continuation step collapsed at s={s:.6f} after {halvings} halvings")


class AmbiguousMatching(NumericalError):
    """Exception raised when continued endpoints cannot be matched to start roots."""
    def __init__(self, message: str, distances: Optional[Sequence[float]] = None):
        self.distances = list(distances) if distances is not None else []
        super().__init__(message)
