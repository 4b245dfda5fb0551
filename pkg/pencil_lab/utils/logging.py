"""
Logging utilities for pencil-lab.
"""
import logging
import os
import sys
from datetime import datetime
from typing import Optional

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(
    log_level: str = "WARNING",
    log_dir: Optional[str] = None,
    log_file_prefix: str = "pencil_lab"
) -> logging.Logger:
    """
    Set up logging configuration.

    Console output goes to stderr; stdout is reserved for reports.

    Args:
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
        log_dir: Directory for a timestamped log file. No file is written if None.
        log_file_prefix: Prefix for log file name.

    Returns:
        Configured package logger.
    """
    # Convert log level string to logging level
    numeric_level = getattr(logging, log_level.upper(), logging.WARNING)

    handlers = [logging.StreamHandler(sys.stderr)]
    log_file = None
    if log_dir is not None:
        # Create log directory if it doesn't exist
        os.makedirs(log_dir, exist_ok=True)
        timestamp = datetime.now().isoformat(timespec="minutes").replace(":", "-")
        log_file = os.path.join(log_dir, f"{log_file_prefix}_{timestamp}.log")
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(level=numeric_level, format=LOG_FORMAT, handlers=handlers, force=True)

    logger = logging.getLogger("pencil_lab")
    logger.setLevel(numeric_level)

    logger.info(f"Logging initialized at level {log_level}")
    if log_file is not None:
        logger.info(f"Log file: {log_file}")

    return logger


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get a logger with the specified name.

    Args:
        name: Logger name below the package logger. If None, returns the package logger.

    Returns:
        Logger instance.
    """
    if name is None:
        return logging.getLogger("pencil_lab")
    return logging.getLogger(f"pencil_lab.{name}")
