"""
Report output for pencil-lab.
"""

from .processor import OutputProcessor
from .json_generator import JSONOutputGenerator
from .csv_generator import CSVOutputGenerator

__all__ = ['OutputProcessor', 'JSONOutputGenerator', 'CSVOutputGenerator']
