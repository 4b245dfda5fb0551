"""
Tests for Gram matrices and exponential convexity checks.
"""
import math

import numpy as np
import pytest

from pencil_lab.core.errors import DomainViolation, InputError, InvalidMeasure
from pencil_lab.core.excon_certify import (
    F_compose,
    QuadratureMeasure,
    add_reports,
    certify_excon,
    composed_sum,
    g_txi,
    gaussian_measure,
    gram_matrix,
    multiply_reports,
    point_mass,
    psd_verdict,
    scale_report,
)
from pencil_lab.core.gram import FAIL, PASS
from pencil_lab.core.secular_solver import roots_real


def test_gram_matrix_entries():
    """Test G[r][s] = f(t_r + t_s)."""
    report = gram_matrix(lambda t: t * t, [0.0, 1.0, 2.0])

    np.testing.assert_array_equal(report.gram, [[0, 1, 4], [1, 4, 9], [4, 9, 16]])
    assert report.verdict is None


def test_gram_matrix_domain():
    """Test that sums outside (a, b) are rejected."""
    with pytest.raises(DomainViolation) as excinfo:
        gram_matrix(math.log, [-0.5, 0.5], (0.0, math.inf))

    assert excinfo.value.value == -1.0


def test_gram_matrix_point_count():
    """Test the point count limits."""
    with pytest.raises(InputError):
        gram_matrix(math.exp, [])
    with pytest.raises(InputError):
        gram_matrix(math.exp, np.zeros(65))


def test_psd_verdict_exponential():
    """Test that Gram matrices of exp pass."""
    report = psd_verdict(gram_matrix(math.exp, [-1.0, 0.0, 0.5, 2.0]))

    assert report.verdict == PASS
    assert report.min_eig >= -1e-8 * report.scale


def test_psd_verdict_negative_control():
    """Test that f(t) = t fails on points including a negative one."""
    report = psd_verdict(gram_matrix(lambda t: t, [-1.0, 1.0]))

    assert report.verdict == FAIL


def test_certify_excon_g_passes(e1_spec):
    """Test that g(., 1) of E1 passes."""
    report = certify_excon(lambda t: g_txi(e1_spec, t, 1.0), N=8, trials=20)

    assert report.passed


def test_certify_excon_random_specs(random_specs):
    """Test g(., xi) on 20 random pencils with 50 trials of 8 points each."""
    for spec in random_specs(20, n_max=5):
        for xi in (-2.0, -0.5, 0.5, 2.0):
            report = certify_excon(lambda t: g_txi(spec, t, xi), N=8, trials=50)
            assert report.passed, (spec, xi, report.min_eig)


def test_certify_excon_negative_control():
    """Test that f(t) = t fails."""
    report = certify_excon(lambda t: t, N=8, trials=50)

    assert report.verdict == FAIL


def test_certify_excon_deterministic(e2_spec):
    """Test that seeds and worker counts do not change the outcome."""
    f = lambda t: g_txi(e2_spec, t, 0.5)
    first = certify_excon(f, N=6, trials=12, seed=3, max_workers=1)
    second = certify_excon(f, N=6, trials=12, seed=3, max_workers=4)

    assert first.points.tolist() == second.points.tolist()
    assert first.min_eig == second.min_eig


def test_certify_excon_interval():
    """Test that points respect a finite interval."""
    report = certify_excon(lambda t: 1.0 / t, a=0.0, b=4.0, N=5, trials=10)

    assert np.all(report.points > 0.0)
    assert np.all(report.points < 2.0)
    assert report.passed


def test_certify_excon_invalid_arguments():
    """Test argument validation."""
    with pytest.raises(InputError):
        certify_excon(math.exp, a=1.0, b=1.0)
    with pytest.raises(InputError):
        certify_excon(math.exp, N=17)
    with pytest.raises(InputError):
        certify_excon(math.exp, trials=0)


def test_g_txi_examples(e1_spec, e2_spec):
    """Test g on closed-form roots."""
    root3 = math.sqrt(3)

    assert g_txi(e1_spec, 0.0, 1.0) == pytest.approx(2 * math.cosh(1))
    assert g_txi(e1_spec, 0.0, 0.0) == 2.0
    assert g_txi(e2_spec, 0.0, 1.0) == pytest.approx(math.exp(root3) + 1 + math.exp(-root3))


def test_quadrature_measure_validation():
    """Test measure validation."""
    with pytest.raises(InvalidMeasure):
        QuadratureMeasure([0.0, 1.0], [1.0])
    with pytest.raises(InvalidMeasure):
        QuadratureMeasure([0.0], [-1.0])
    with pytest.raises(InvalidMeasure):
        QuadratureMeasure([math.inf], [1.0])


def test_gaussian_measure_laplace_transform():
    """Test sum_j w_j exp(xi_j x) = exp(gamma x^2)."""
    measure = gaussian_measure(0.5)

    assert measure.total_mass == pytest.approx(1.0, abs=1e-10)
    for x in (-2.0, 0.0, 1.5, 3.0):
        assert measure.laplace(x) == pytest.approx(math.exp(0.5 * x * x), rel=1e-9)


def test_gaussian_measure_invalid():
    """Test parameter validation."""
    with pytest.raises(InputError):
        gaussian_measure(0.0)
    with pytest.raises(InputError):
        gaussian_measure(0.5, count=1)


def test_F_compose_gaussian_examples(e1_spec, e2_spec):
    """Test the Gaussian composition against closed forms."""
    assert F_compose(e1_spec, gaussian_measure(0.5, 12, 2001), 0.0) == pytest.approx(
        2 * math.exp(0.5), abs=1e-6
    )
    assert F_compose(e2_spec, gaussian_measure(0.25, 12, 2001), 0.0) == pytest.approx(
        1 + 2 * math.exp(0.75), abs=1e-6
    )


@pytest.mark.parametrize("gamma", [0.25, 0.5])
@pytest.mark.parametrize("t", [-2.0, -1.0, 0.0, 1.0, 2.0])
def test_F_compose_gaussian_grid(e1_spec, e2_spec, gamma, t):
    """Test the Gaussian composition on a grid of t."""
    measure = gaussian_measure(gamma, 12, 2001)
    for spec in (e1_spec, e2_spec):
        direct = float(np.sum(np.exp(gamma * roots_real(spec, t).roots ** 2)))
        assert abs(F_compose(spec, measure, t) - direct) <= 1e-6


def test_F_compose_point_mass(e1_spec):
    """Test that a point mass reduces to g."""
    assert F_compose(e1_spec, point_mass(1.0), 0.0) == pytest.approx(2 * math.cosh(1))


def test_composed_sum_window(e2_spec):
    """Test F(t) = sum f(nu_k(t)) and its root window."""
    F = composed_sum(e2_spec, np.square)
    assert F(0.0) == pytest.approx(6.0)

    bounded = composed_sum(e2_spec, np.log, u=0.0)
    with pytest.raises(DomainViolation):
        bounded(0.0)


def test_closure_operations(e1_spec):
    """Test that scaled, summed and multiplied Gram matrices stay PSD."""
    points = [-1.5, -0.3, 0.4, 1.2, 2.0]
    first = psd_verdict(gram_matrix(lambda t: math.exp(0.5 * t), points))
    second = psd_verdict(gram_matrix(lambda t: g_txi(e1_spec, t, 1.0), points))
    assert first.passed and second.passed

    assert psd_verdict(scale_report(first, 3.0)).passed
    assert psd_verdict(add_reports(first, second)).passed
    assert psd_verdict(multiply_reports(first, second)).passed


def test_closure_operations_need_shared_points():
    """Test that reports on different point sets do not combine."""
    first = gram_matrix(math.exp, [0.0, 1.0])
    second = gram_matrix(math.exp, [0.0, 2.0])

    with pytest.raises(InputError):
        add_reports(first, second)
    with pytest.raises(InputError):
        scale_report(first, -1.0)
