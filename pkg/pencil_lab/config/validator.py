"""
Run configuration validator for pencil-lab.
"""
from typing import List

from .models import RunConfig
from ..core.excon_certify import MAX_CERTIFY_POINTS
from ..core.monodromy import MIN_STEPS


class RunConfigValidator:
    """
    Validates command-specific requirements of a RunConfig.
    """

    def validate(self, config: RunConfig) -> List[str]:
        """
        Validate a run configuration.

        Args:
            config: Configuration to validate.

        Returns:
            List of validation errors. Empty list if configuration is valid.
        """
        errors = []

        if config.t is not None and config.grid is not None:
            errors.append("Give either --t or --grid, not both")
        if config.tol is not None and config.tol <= 0:
            errors.append(f"Tolerance must be positive, got {config.tol}")
        if config.threads is not None and config.threads < 1:
            errors.append(f"Thread count must be positive, got {config.threads}")

        check = getattr(self, f"_validate_{config.command}", None)
        if check is not None:
            errors.extend(check(config))

        return errors

    def _validate_detrep(self, config: RunConfig) -> List[str]:
        errors = []
        if config.samples < 1:
            errors.append(f"detrep requires a positive sample count, got {config.samples}")
        return errors

    def _validate_excon(self, config: RunConfig) -> List[str]:
        errors = []
        if not 1 <= config.points <= MAX_CERTIFY_POINTS:
            errors.append(f"excon requires 1..{MAX_CERTIFY_POINTS} points, got {config.points}")
        if config.trials < 1:
            errors.append(f"excon requires a positive trial count, got {config.trials}")
        return errors

    def _validate_gaussian(self, config: RunConfig) -> List[str]:
        errors = []
        if config.gamma is None:
            errors.append("gaussian requires --gamma")
        elif config.gamma <= 0:
            errors.append(f"gaussian requires a positive --gamma, got {config.gamma}")
        if config.half_width <= 0:
            errors.append(f"Quadrature half width must be positive, got {config.half_width}")
        if config.count < 2:
            errors.append(f"Quadrature needs at least 2 nodes, got {config.count}")
        return errors

    def _validate_monodromy(self, config: RunConfig) -> List[str]:
        errors = []
        if config.circle is None and len(config.vertices) < 2:
            errors.append("monodromy requires either --center/--radius or at least two --vertex values")
        if config.circle is not None and config.vertices:
            errors.append("monodromy takes a circle or a polyline, not both")
        if config.steps < MIN_STEPS:
            errors.append(f"Paths need at least {MIN_STEPS} steps, got {config.steps}")
        return errors
