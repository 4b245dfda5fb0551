"""
Threading utilities for Pencil Lab.
"""
import os
import logging
import concurrent.futures
from typing import Callable, Generic, List, Optional, Sequence, TypeVar

# Set up logger
logger = logging.getLogger(__name__)

# Type variables for generic functions
T = TypeVar('T')  # Input type
R = TypeVar('R')  # Result type

THREADS_ENV_VAR = "PENCIL_LAB_THREADS"


def resolve_thread_count(threads: Optional[int] = None) -> int:
    """
    Resolve the worker count from an explicit value or the environment.

    Args:
        threads: Explicit thread count. If None, PENCIL_LAB_THREADS is consulted.

    Returns:
        Number of worker threads, at least 1.

    Raises:
        ValueError: If the environment variable is not a positive integer.
    """
    if threads is not None:
        return max(1, int(threads))

    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return 1

    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{THREADS_ENV_VAR} must be positive, got {value}")
    return value


class ThreadingManager(Generic[T, R]):
    """
    Manager for concurrent execution of independent tasks.

    Results always come back in input order, so any reduction over them is
    deterministic regardless of the number of workers.
    """

    def __init__(self, max_workers: Optional[int] = None):
        """
        Initialize threading manager.

        Args:
            max_workers: Maximum number of worker threads. If None, the value is
                        taken from PENCIL_LAB_THREADS, defaulting to 1.
        """
        self.max_workers = resolve_thread_count(max_workers)

    def execute(self, func: Callable[[T], R], items: Sequence[T]) -> List[R]:
        """
        Execute a function for each item, concurrently when more than one worker is allowed.

        Args:
            func: Function to execute for each item.
            items: Items to process.

        Returns:
            Results in the same order as items.

        Raises:
            Exception: The failure of the first failing item in input order.
        """
        items = list(items)
        if self.max_workers == 1 or len(items) <= 1:
            return [func(item) for item in items]

        with concurrent.futures.ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            futures = [executor.submit(func, item) for item in items]
            concurrent.futures.wait(futures)

        results = []
        for index, future in enumerate(futures):
            error = future.exception()
            if error is not None:
                logger.error(f"Error processing item {index}: {error}")
                raise error
            results.append(future.result())

        return results
