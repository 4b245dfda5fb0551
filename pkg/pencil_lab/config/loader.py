"""
Spec file loader for pencil-lab.
"""
import json
import logging
import os
from typing import Any, Dict, Union

import yaml

from .models import PencilSpecFile
from ..core.pencil_core import PencilSpec

# Set up logger
logger = logging.getLogger(__name__)


class SpecLoader:
    """
    Spec file loader that supports both YAML and JSON formats.
    """

    def load_spec(self, path: str) -> PencilSpec:
        """
        Load and validate a pencil spec from file.

        Args:
            path: Path to the spec file.

        Returns:
            PencilSpec sorted by decreasing pole.

        Raises:
            FileNotFoundError: If the spec file does not exist.
            ValueError: If the file does not parse into a spec.
            InputError: If new_pencil rejects the values.
        """
        spec = self.load_spec_file(path).to_spec()
        logger.info(f"Loaded pencil with {spec.n} poles from {path}")
        return spec

    def load_spec_file(self, path: str) -> PencilSpecFile:
        """
        Parse a spec file without validating the pencil itself.

        Args:
            path: Path to the spec file.

        Returns:
            PencilSpecFile.
        """
        if not os.path.exists(path):
            raise FileNotFoundError(f"Spec file not found: {path}")

        format_type = self._detect_format(path)

        with open(path, 'r', encoding='utf-8') as f:
            if format_type == 'yaml':
                spec_data = yaml.safe_load(f)
            else:
                spec_data = json.load(f)

        # Pole records are converted to the columnar form
        if self._is_record_format(spec_data):
            spec_data = self._convert_record_format(spec_data)

        if not isinstance(spec_data, dict):
            raise ValueError(f"Spec file {path} must contain an object with 'mu' and 'alpha'")

        return PencilSpecFile.model_validate(spec_data)

    def _detect_format(self, path: str) -> str:
        """
        Detect file format based on extension.

        Args:
            path: Path to the spec file.

        Returns:
            Format type ('yaml' or 'json').
        """
        _, ext = os.path.splitext(path)
        if ext.lower() in ['.yaml', '.yml']:
            return 'yaml'
        # Default to JSON if extension is not recognized
        return 'json'

    def _is_record_format(self, spec_data: Union[Dict[str, Any], list, None]) -> bool:
        """Check for a list of {"mu": ..., "alpha": ...} records."""
        if isinstance(spec_data, list):
            return all(isinstance(item, dict) and 'mu' in item and 'alpha' in item for item in spec_data)
        return False

    def _convert_record_format(self, spec_data: list) -> Dict[str, Any]:
        """
        Convert pole records to columnar form.

        Args:
            spec_data: List of pole records.

        Returns:
            Dictionary with 'mu' and 'alpha' lists.
        """
        return {
            "mu": [item['mu'] for item in spec_data],
            "alpha": [item['alpha'] for item in spec_data],
        }
