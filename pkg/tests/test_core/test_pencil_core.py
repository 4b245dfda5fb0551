"""
Tests for pencil validation and its polynomials.
"""
import numpy as np
import pytest

from pencil_lab.core.errors import (
    DuplicatePole,
    EmptySpec,
    InputError,
    NonpositiveWeight,
    PoleHit,
    SpecTooLarge,
)
from pencil_lab.core.pencil_core import (
    MAX_POLES,
    eval_R,
    eval_R_derivative,
    new_pencil,
    pencil_poly,
    poly_P,
    poly_Q,
    poly_Qk,
)


def test_new_pencil_minimal(e1_spec):
    """Test that one pole gives n = 1."""
    assert e1_spec.n == 1
    assert e1_spec.mu.tolist() == [0.0]
    assert e1_spec.alpha.tolist() == [1.0]


def test_new_pencil_sorts_descending():
    """Test that poles are sorted decreasing with residues permuted alongside."""
    spec = new_pencil([-1.0, 3.0, 1.0], [1.0, 2.0, 3.0])

    assert spec.mu.tolist() == [3.0, 1.0, -1.0]
    assert spec.alpha.tolist() == [2.0, 3.0, 1.0]


def test_new_pencil_duplicate_pole():
    """Test that coinciding poles are rejected."""
    with pytest.raises(DuplicatePole) as excinfo:
        new_pencil([0.0, 0.0], [1.0, 1.0])

    assert excinfo.value.first == 0.0
    assert isinstance(excinfo.value, InputError)


def test_new_pencil_nearly_duplicate_pole():
    """Test the absolute duplicate tolerance."""
    with pytest.raises(DuplicatePole):
        new_pencil([1.0, 1.0 + 1e-13], [1.0, 1.0])

    assert new_pencil([1.0, 1.0 + 1e-9], [1.0, 1.0]).n == 2


@pytest.mark.parametrize("alpha", [[0.0], [-1.0]])
def test_new_pencil_nonpositive_weight(alpha):
    """Test that residues must be strictly positive."""
    with pytest.raises(NonpositiveWeight) as excinfo:
        new_pencil([0.0], alpha)

    assert excinfo.value.index == 0


def test_new_pencil_empty():
    """Test that an empty pencil is rejected."""
    with pytest.raises(EmptySpec):
        new_pencil([], [])


def test_new_pencil_too_large():
    """Test the pole count limit."""
    with pytest.raises(SpecTooLarge):
        new_pencil(np.arange(MAX_POLES + 1, dtype=float), np.ones(MAX_POLES + 1))


def test_new_pencil_length_mismatch():
    """Test that mu and alpha must have the same length."""
    with pytest.raises(ValueError):
        new_pencil([0.0, 1.0], [1.0])


def test_spec_is_read_only(e2_spec):
    """Test that the spec arrays cannot be modified."""
    with pytest.raises(ValueError):
        e2_spec.mu[0] = 5.0


def test_eval_R_values(e1_spec, e2_spec):
    """Test hand-computed values of R."""
    assert eval_R(e1_spec, 2.0) == pytest.approx(1.5)
    assert eval_R(e2_spec, 2.0) == pytest.approx(2.0 - 1.0 - 1.0 / 3.0)
    assert eval_R(e1_spec, 1j) == pytest.approx(2j)


def test_eval_R_pole_hit(e2_spec):
    """Test evaluation on a pole."""
    with pytest.raises(PoleHit) as excinfo:
        eval_R(e2_spec, 1.0)

    assert excinfo.value.pole == 1.0

    with pytest.raises(PoleHit):
        eval_R_derivative(e2_spec, -1.0)


def test_eval_R_upper_half_plane(random_specs, rng):
    """Test that R maps the upper half-plane into itself."""
    for spec in random_specs(20):
        z = rng.uniform(-10, 10, 10) + 1j * rng.uniform(1e-3, 5, 10)
        for zi in z:
            assert eval_R(spec, zi).imag > 0


def test_poly_Q_coefficients(e1_spec, e2_spec):
    """Test Q = prod (z - mu_k)."""
    assert poly_Q(e1_spec).coeffs.tolist() == [0.0, 1.0]
    assert poly_Q(e2_spec).coeffs.tolist() == [-1.0, 0.0, 1.0]
    assert poly_Q(new_pencil([2.0], [1.0])).coeffs.tolist() == [-2.0, 1.0]


def test_poly_P_coefficients(e1_spec, e2_spec):
    """Test P = zQ - sum alpha_k Q_k."""
    np.testing.assert_allclose(poly_P(e1_spec).coeffs, [-1.0, 0.0, 1.0])
    np.testing.assert_allclose(poly_P(e2_spec).coeffs, [0.0, -3.0, 0.0, 1.0], atol=1e-15)
    np.testing.assert_allclose(poly_P(new_pencil([5.0], [2.0])).coeffs, [-2.0, -5.0, 1.0])


def test_poly_Qk_leaves_one_pole_out(e2_spec):
    """Test Q_k = Q / (z - mu_k)."""
    np.testing.assert_allclose(poly_Qk(e2_spec, 0).coeffs, [1.0, 1.0])
    np.testing.assert_allclose(poly_Qk(e2_spec, 1).coeffs, [-1.0, 1.0])


def test_poly_degrees_and_monic(random_specs):
    """Test degrees n and n + 1 with leading coefficient 1."""
    for spec in random_specs(20):
        p = poly_P(spec)
        q = poly_Q(spec)
        assert q.degree == spec.n
        assert p.degree == spec.n + 1
        assert q.coeffs[-1] == 1.0
        assert p.coeffs[-1] == pytest.approx(1.0)


def test_P_at_poles(random_specs):
    """Test P(mu_k) = -alpha_k Q'(mu_k)."""
    for spec in random_specs(20, min_gap=1.0):
        p = poly_P(spec)
        dq = poly_Q(spec).derivative()
        for mu_k, alpha_k in zip(spec.mu, spec.alpha):
            expected = -alpha_k * dq(mu_k)
            assert abs(p(mu_k) - expected) <= 1e-10 * abs(expected)


def test_R_equals_P_over_Q(random_specs, rng):
    """Test R = P / Q at real points away from the poles."""
    for spec in random_specs(100, min_gap=1.0):
        p = poly_P(spec)
        q = poly_Q(spec)
        for x in rng.uniform(-12, 12, 5):
            if np.min(np.abs(x - spec.mu)) < 1e-3:
                continue
            value = eval_R(spec, x)
            assert abs(value - p(x) / q(x)) <= 1e-9 * (1 + abs(value))


def test_pencil_poly(e1_spec, e2_spec):
    """Test P - tQ for real and complex t."""
    np.testing.assert_allclose(pencil_poly(e1_spec, 0).coeffs, [-1, 0, 1])
    np.testing.assert_allclose(pencil_poly(e1_spec, 3).coeffs, [-1, -3, 1])
    np.testing.assert_allclose(pencil_poly(e2_spec, 1j).coeffs, [1j, -3, -1j, 1], atol=1e-15)
    assert pencil_poly(e2_spec, 1j).degree == 3
