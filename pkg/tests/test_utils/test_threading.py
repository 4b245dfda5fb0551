"""
Tests for threading utilities.
"""
import pytest

from pencil_lab.utils.threading import THREADS_ENV_VAR, ThreadingManager, resolve_thread_count


def test_resolve_explicit():
    """Test that an explicit count wins over the environment."""
    assert resolve_thread_count(4) == 4


def test_resolve_default(monkeypatch):
    """Test the single-thread default."""
    monkeypatch.delenv(THREADS_ENV_VAR, raising=False)

    assert resolve_thread_count() == 1


def test_resolve_environment(monkeypatch):
    """Test the environment variable."""
    monkeypatch.setenv(THREADS_ENV_VAR, "3")

    assert resolve_thread_count() == 3


@pytest.mark.parametrize("raw", ["abc", "0", "-2"])
def test_resolve_invalid_environment(monkeypatch, raw):
    """Test that malformed environment values are rejected."""
    monkeypatch.setenv(THREADS_ENV_VAR, raw)

    with pytest.raises(ValueError):
        resolve_thread_count()


def test_execute_keeps_order():
    """Test that results come back in input order."""
    items = list(range(20))

    serial = ThreadingManager(1).execute(lambda x: x * x, items)
    threaded = ThreadingManager(4).execute(lambda x: x * x, items)

    assert serial == threaded == [x * x for x in items]


def test_execute_propagates_first_error():
    """Test that the first failing item in input order is raised."""
    def func(x):
        if x >= 3:
            raise RuntimeError(f"failed on {x}")
        return x

    with pytest.raises(RuntimeError, match="failed on 3"):
        ThreadingManager(4).execute(func, range(8))
