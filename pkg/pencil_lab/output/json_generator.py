"""
JSON report writer.
"""
import json
import logging
import math
from typing import Any, Dict, TextIO

import numpy as np


def format_float(value: float) -> str:
    """Format a float with 17 significant digits; non-finite values become null."""
    if not math.isfinite(value):
        return "null"
    return "%.17g" % value


class ReportEncoder(json.JSONEncoder):
    """
    JSON encoder writing every float with 17 significant digits.

    numpy scalars and arrays are converted to plain Python values and complex
    numbers to [real, imag] pairs.
    """

    def default(self, o: Any) -> Any:
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.floating):
            return float(o)
        if isinstance(o, np.bool_):
            return bool(o)
        if isinstance(o, (complex, np.complexfloating)):
            return [float(o.real), float(o.imag)]
        if hasattr(o, "to_dict"):
            return o.to_dict()
        return super().default(o)

    def iterencode(self, o: Any, _one_shot: bool = False):
        if self.ensure_ascii:
            encoder = json.encoder.encode_basestring_ascii
        else:
            encoder = json.encoder.encode_basestring
        # the C encoder ignores a custom float formatter; _make_iterencode is
        # private, its positional signature is pinned by the output tests
        return json.encoder._make_iterencode(
            {} if self.check_circular else None,
            self.default,
            encoder,
            self.indent,
            format_float,
            self.key_separator,
            self.item_separator,
            self.sort_keys,
            self.skipkeys,
            False,
        )(o, 0)


def dumps(data: Any, indent: int = 2) -> str:
    """Serialise data with ReportEncoder."""
    return json.dumps(data, cls=ReportEncoder, indent=indent, ensure_ascii=False)


class JSONOutputGenerator:
    """
    Writes reports as JSON objects.
    """

    def __init__(self):
        """Initialize the JSON generator."""
        self.logger = logging.getLogger(__name__)

    def generate(self, report: Dict[str, Any], stream: TextIO) -> None:
        """
        Write a report as indented JSON followed by a newline.

        Keys keep their insertion order so identical reports produce identical bytes.

        Args:
            report: Report dictionary.
            stream: Text stream to write to.
        """
        self.logger.debug(f"Writing JSON report for command {report.get('command')}")
        stream.write(dumps(report))
        stream.write("\n")
