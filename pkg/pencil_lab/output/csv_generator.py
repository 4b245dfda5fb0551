"""
CSV report writer.
"""
import logging
from typing import Any, Dict, TextIO

import pandas as pd

from .json_generator import dumps


class CSVOutputGenerator:
    """
    Writes reports as CSV rows.

    Reports carrying a "rows" table are written one row per entry; other
    reports are flattened into a single row with dotted column names.
    """

    def __init__(self):
        """Initialize the CSV generator."""
        self.logger = logging.getLogger(__name__)

    def generate(self, report: Dict[str, Any], stream: TextIO) -> None:
        """
        Write a report as CSV.

        Args:
            report: Report dictionary.
            stream: Text stream to write to.
        """
        df = self._to_dataframe(report)
        self.logger.debug(f"Writing CSV report with {len(df)} rows and {len(df.columns)} columns")
        df.to_csv(stream, index=False, float_format="%.17g", lineterminator="\n")

    def _to_dataframe(self, report: Dict[str, Any]) -> pd.DataFrame:
        """
        Convert a report to a DataFrame.

        Args:
            report: Report dictionary.

        Returns:
            DataFrame with scalar cells; nested lists are JSON-encoded.
        """
        rows = report.get("outputs", {}).get("rows")
        if rows:
            records = [self._flatten(row) for row in rows]
        else:
            records = [self._flatten(report)]
        return pd.DataFrame.from_records(records)

    def _flatten(self, data: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
        flat: Dict[str, Any] = {}
        for key, value in data.items():
            name = f"{prefix}{key}"
            if isinstance(value, dict):
                flat.update(self._flatten(value, f"{name}."))
            elif isinstance(value, (list, tuple)):
                flat[name] = dumps(list(value), indent=None)
            elif hasattr(value, "tolist"):
                value = value.tolist()
                flat[name] = dumps(value, indent=None) if isinstance(value, list) else value
            else:
                flat[name] = value
        return flat


