"""
Output processor for pencil-lab reports.
"""
import logging
from typing import Any, Dict, TextIO

from .csv_generator import CSVOutputGenerator
from .json_generator import JSONOutputGenerator

FORMATS = ("json", "csv")


class OutputProcessor:
    """
    Dispatches a report to the generator of the requested format.
    """

    def __init__(self):
        """Initialize the output processor."""
        self.logger = logging.getLogger(__name__)
        self.json_generator = JSONOutputGenerator()
        self.csv_generator = CSVOutputGenerator()

    def process(self, report: Dict[str, Any], fmt: str, stream: TextIO) -> None:
        """
        Write a report in the given format.

        Args:
            report: Report dictionary.
            fmt: 'json' or 'csv'.
            stream: Text stream to write to.

        Raises:
            ValueError: If the format is unknown.
        """
        if fmt == "json":
            self._process(self.json_generator, report, stream)
        elif fmt == "csv":
            self._process(self.csv_generator, report, stream)
        else:
            raise ValueError(f"Unknown output format: {fmt}")

    def _process(self, generator: Any, report: Dict[str, Any], stream: TextIO) -> None:
        try:
            generator.generate(report, stream)
        except Exception as e:
            self.logger.error(f"Error generating {type(generator).__name__} output: {e}")
            raise
