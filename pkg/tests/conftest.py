import json

import numpy as np
import pytest

from pencil_lab.core.pencil_core import DUPLICATE_POLE_TOL, new_pencil


def make_random_spec(rng, n_max=8, min_gap=0.0):
    """Draw a pencil with poles uniform in [-10, 10] and residues uniform in (0, 10].

    Poles closer than min_gap are redrawn. Tests that expand P and Q into
    monomial coefficients pass min_gap=1.0, since close poles make those
    coefficients ill conditioned.
    """
    n = int(rng.integers(1, n_max + 1))
    gap = max(min_gap, 1e3 * DUPLICATE_POLE_TOL)
    while True:
        mu = rng.uniform(-10.0, 10.0, n)
        if n == 1 or np.min(np.diff(np.sort(mu))) >= gap:
            break
    alpha = 10.0 * (1.0 - rng.random(n))
    return new_pencil(mu, alpha)


@pytest.fixture
def e1_spec():
    """R(z) = z - 1/z; P = z^2 - 1, Q = z."""
    return new_pencil([0.0], [1.0])


@pytest.fixture
def e2_spec():
    """R(z) = z - 1/(z - 1) - 1/(z + 1); P = z^3 - 3z, Q = z^2 - 1."""
    return new_pencil([1.0, -1.0], [1.0, 1.0])


@pytest.fixture
def rng():
    """Seeded random stream shared by property tests."""
    return np.random.default_rng(20240611)


@pytest.fixture
def random_specs(rng):
    """Factory for lists of random pencils."""
    def factory(count, n_max=8, min_gap=0.0):
        return [make_random_spec(rng, n_max, min_gap) for _ in range(count)]
    return factory


@pytest.fixture
def e1_spec_file(tmp_path):
    """E1 spec as a JSON file."""
    path = tmp_path / "e1.json"
    path.write_text(json.dumps({"mu": [0.0], "alpha": [1.0]}))
    return str(path)


@pytest.fixture
def e2_spec_file(tmp_path):
    """E2 spec as a JSON file, poles in ascending order."""
    path = tmp_path / "e2.json"
    path.write_text(json.dumps({"mu": [-1.0, 1.0], "alpha": [1.0, 1.0]}))
    return str(path)


@pytest.fixture
def duplicate_spec_file(tmp_path):
    """Spec file with two coinciding poles."""
    path = tmp_path / "duplicate.json"
    path.write_text(json.dumps({"mu": [0.5, 0.5], "alpha": [1.0, 2.0]}))
    return str(path)
