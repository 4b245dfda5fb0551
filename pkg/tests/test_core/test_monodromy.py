"""
Tests for critical values, complex root sets and branch monodromy.
"""
import math

import numpy as np
import pytest

from pencil_lab.core import monodromy
from pencil_lab.core.arrowhead_rep import build_arrowhead, dense_eigs_oracle
from pencil_lab.core.errors import (
    InputError,
    InvalidPath,
    LoopConditionViolated,
    PathTooCloseToCritical,
)
from pencil_lab.core.monodromy import (
    PathSpec,
    aberth_roots,
    compose_permutations,
    continue_branches,
    critical_data,
    cyclic_shift,
    loop_monodromy,
    roots_at_complex_t,
    strip_height,
)
from pencil_lab.core.pencil_core import PolyComplex, eval_R_derivative, new_pencil
from pencil_lab.core.secular_solver import roots_real

E2_H = 3 ** 0.25 * (3 + math.sqrt(3)) / (2 * math.sqrt(2))
E2_RE = 3 ** 0.25 * (3 - math.sqrt(3)) / (2 * math.sqrt(2))
E2_BOX = [0, 2, 2 + 2.5j, -2 + 2.5j, -2, 0]


def test_aberth_roots_quadratic():
    """Test the roots of z^2 + 1."""
    roots = aberth_roots(PolyComplex([1, 0, 1]))

    np.testing.assert_allclose(sorted(roots, key=lambda z: z.imag), [-1j, 1j], atol=1e-14)


def test_aberth_roots_matches_numpy(rng):
    """Test random polynomials against numpy's companion-matrix roots."""
    for degree in (3, 6, 10):
        coeffs = rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)
        roots = aberth_roots(PolyComplex(coeffs))
        expected = np.roots(coeffs[::-1])
        for root in expected:
            assert np.min(np.abs(roots - root)) <= 1e-9 * (1 + abs(root))


def test_aberth_roots_constant():
    """Test that constants have no roots to find."""
    with pytest.raises(InputError):
        aberth_roots(PolyComplex([2.0]))


def test_critical_data_e1(e1_spec):
    """Test zeta = i, t_1 = 2i and h = 2."""
    crit = critical_data(e1_spec)

    assert abs(crit.zeros_upper[0] - 1j) <= 1e-9
    assert abs(crit.values_upper[0] - 2j) <= 1e-9
    assert crit.h == pytest.approx(2.0, abs=1e-9)


def test_critical_data_e2(e2_spec):
    """Test the critical values of z^3 - 3z over z^2 - 1."""
    crit = critical_data(e2_spec)

    np.testing.assert_allclose(crit.values_upper.real, [E2_RE, -E2_RE], atol=1e-9)
    np.testing.assert_allclose(crit.values_upper.imag, [E2_H, E2_H], atol=1e-9)
    assert crit.h == pytest.approx(E2_H, abs=1e-9)
    assert crit.h == pytest.approx(2.20189, abs=1e-3)
    np.testing.assert_allclose(np.abs(crit.zeros_upper) ** 4, [3, 3], rtol=1e-12)


def test_critical_data_random(random_specs):
    """Test that every upper critical point solves R' = 0 with Im t_k > 0."""
    for spec in random_specs(50):
        crit = critical_data(spec)
        assert crit.zeros_upper.size == spec.n
        assert np.all(crit.values_upper.imag > 0)
        for zeta in crit.zeros_upper:
            assert abs(eval_R_derivative(spec, zeta)) <= 1e-8


def test_critical_data_close_poles():
    """Test critical points of a pencil with two poles 0.0354 apart."""
    spec = new_pencil(
        [-7.5019, -7.5373, 4.2, 9.1, -1.3, 2.7, -3.9],
        [8.7, 0.3, 2.2, 6.1, 9.9, 0.05, 4.4],
    )
    crit = critical_data(spec)

    assert crit.zeros_upper.size == spec.n
    assert np.all(crit.zeros_upper.imag > 0)
    assert np.all(crit.values_upper.imag > 0)
    for zeta in crit.zeros_upper:
        assert abs(eval_R_derivative(spec, zeta)) <= 1e-8


def test_strip_height(e1_spec, e2_spec):
    """Test h for the closed-form pencils."""
    assert strip_height(e1_spec) == pytest.approx(2.0, abs=1e-9)
    assert strip_height(e2_spec) == pytest.approx(E2_H, abs=1e-9)


def test_roots_at_complex_t_examples(e1_spec, e2_spec):
    """Test complex root sets."""
    np.testing.assert_allclose(roots_at_complex_t(e1_spec, 0), [1, -1], atol=1e-14)

    double = roots_at_complex_t(e1_spec, 2j)
    np.testing.assert_allclose(double, [1j, 1j], atol=1e-5)

    assert np.all(roots_at_complex_t(e2_spec, 1j).imag > 0)


def test_three_oracles_agree(random_specs, rng):
    """Test secular roots, Jacobi eigenvalues and Aberth roots against each other."""
    for spec in random_specs(20, min_gap=1.0):
        t = float(rng.uniform(-5, 5))
        secular = roots_real(spec, t).roots
        dense = dense_eigs_oracle(build_arrowhead(spec).pencil_matrix(t))[::-1]
        aberth = roots_at_complex_t(spec, t)
        scale = 1 + np.max(np.abs(secular))

        np.testing.assert_allclose(secular, dense, atol=1e-8 * scale)
        np.testing.assert_allclose(aberth.real, secular, atol=1e-8 * scale)
        np.testing.assert_allclose(aberth.imag, 0, atol=1e-8 * scale)


def test_path_validation():
    """Test path parameter checks."""
    with pytest.raises(InvalidPath):
        PathSpec.circle(0j, 1.0, steps=8)
    with pytest.raises(InvalidPath):
        PathSpec.circle(0j, 0.0)
    with pytest.raises(InvalidPath):
        PathSpec.polyline([1.0])
    with pytest.raises(InvalidPath):
        PathSpec.polyline([0, 1, 1, 0])


def test_path_geometry():
    """Test base points, windings and orientation."""
    circle = PathSpec.circle(1.9j, 2.0)
    assert abs(circle.base_point.imag) <= 1e-12
    assert circle.base_point.real == pytest.approx(math.sqrt(4 - 1.9 ** 2))
    assert circle.winding_number(2j) == 1
    assert circle.winding_number(-2j) == 0

    box = PathSpec.polyline(E2_BOX)
    assert box.is_closed
    assert box.orientation_sign == 1
    assert box.reversed().orientation_sign == -1
    assert box.winding_number(1 + 1j) == 1
    assert box.reversed().winding_number(1 + 1j) == -1
    assert box.distance_to(1 + 3j) == pytest.approx(0.5)


def test_continue_branches_real_segment(e1_spec):
    """Test continuation along 0 -> 1 on the real axis."""
    trace = continue_branches(e1_spec, PathSpec.polyline([0, 1]), [1, -1])
    golden = (1 + math.sqrt(5)) / 2

    np.testing.assert_allclose(trace.endpoints, [golden, 1 - golden], atol=1e-12)
    assert trace.s[0] == 0.0 and trace.s[-1] == 1.0


def test_continue_branches_tangent_predictor(mocker, e1_spec):
    """Test that Newton starts from z + dt / R'(z); R'(+-1) = 2 for z - 1/z."""
    newton = mocker.spy(monodromy, "_newton_secular")
    path = PathSpec.polyline([0, 1])
    continue_branches(e1_spec, path, [1, -1])

    first_start = newton.call_args_list[0].args[1]
    dt = path.point(1.0 / path.steps) - path.point(0.0)
    np.testing.assert_allclose(first_start, np.array([1, -1]) + dt / 2, atol=1e-15)


def test_continue_branches_retraces(e2_spec):
    """Test that an out-and-back path returns to the start."""
    start = roots_real(e2_spec, 0.0).roots
    trace = continue_branches(e2_spec, PathSpec.polyline([0, 1 + 1j, 0]), start)

    np.testing.assert_allclose(trace.endpoints, start, atol=1e-8)


def test_continue_branches_swaps_around_branch_point(e1_spec):
    """Test that a small loop around t = 2i exchanges the two sheets."""
    loop = PathSpec.circle(2j, 0.5)
    start = roots_at_complex_t(e1_spec, loop.base_point)
    trace = continue_branches(e1_spec, loop, start)

    assert abs(trace.endpoints[0] - start[1]) <= 1e-8
    assert abs(trace.endpoints[1] - start[0]) <= 1e-8


def test_continue_branches_too_close(e1_spec):
    """Test that paths through a critical value are rejected."""
    with pytest.raises(PathTooCloseToCritical):
        continue_branches(e1_spec, PathSpec.circle(1 + 2j, 1.0), [1, -1])


def test_loop_monodromy_transposition(e1_spec):
    """Test the square-root monodromy of E1."""
    result = loop_monodromy(e1_spec, PathSpec.circle(1.9j, 2.0))

    assert result.permutation == [1, 0]
    assert result.closure_error <= 1e-8
    assert result.windings == [1]
    assert result.matches_expected


def test_loop_monodromy_contractible(e1_spec):
    """Test a loop enclosing no critical value."""
    result = loop_monodromy(e1_spec, PathSpec.circle(5.0, 1.0, base_angle=math.pi))

    assert result.base_point == pytest.approx(4.0)
    assert result.permutation == [0, 1]
    assert result.closure_error <= 1e-8
    assert result.windings == [0]


def test_loop_monodromy_cyclic_shift(e2_spec):
    """Test nu_k -> nu_{k-1} around both critical values."""
    result = loop_monodromy(e2_spec, PathSpec.polyline(E2_BOX, steps=400))

    assert result.permutation == [2, 0, 1]
    assert result.expected == [2, 0, 1]
    assert result.windings == [1, 1]
    assert result.orientation == 1
    assert result.closure_error <= 1e-8


def test_loop_monodromy_clockwise(e2_spec):
    """Test that reversing the loop inverts the permutation."""
    result = loop_monodromy(e2_spec, PathSpec.polyline(E2_BOX, steps=400).reversed())

    assert result.permutation == [1, 2, 0]
    assert result.matches_expected
    assert compose_permutations(result.permutation, [2, 0, 1]) == [0, 1, 2]


def test_loop_monodromy_repeated_loop(e1_spec, e2_spec):
    """Test that n + 1 traversals give the identity."""
    assert loop_monodromy(e1_spec, PathSpec.circle(1.9j, 2.0, turns=2)).permutation == [0, 1]

    result = loop_monodromy(e2_spec, PathSpec.polyline(E2_BOX + E2_BOX[1:] * 2, steps=1200))
    assert result.permutation == [0, 1, 2]
    assert result.windings == [3, 3]


def test_loop_monodromy_partial_loop(e2_spec):
    """Test that loops around part of the critical values are reported, not predicted."""
    loop = PathSpec.polyline([0, 2, 2 + 2.5j, 0.2 + 2.5j, 0.2, 0], steps=400)
    result = loop_monodromy(e2_spec, loop)

    assert result.windings == [1, 0]
    assert result.expected is None
    assert result.matches_expected is None
    assert sorted(result.permutation) == [0, 1, 2]


def test_loop_monodromy_conditions(e1_spec):
    """Test open loops, complex base points and loops dipping below -h."""
    with pytest.raises(LoopConditionViolated):
        loop_monodromy(e1_spec, PathSpec.polyline([0, 1]))
    with pytest.raises(LoopConditionViolated):
        loop_monodromy(e1_spec, PathSpec.circle(3j, 0.5))
    with pytest.raises(LoopConditionViolated):
        loop_monodromy(e1_spec, PathSpec.circle(0j, 2.5))


def test_cyclic_shift():
    """Test the shift permutation."""
    assert cyclic_shift(3, 1) == [2, 0, 1]
    assert cyclic_shift(3, -1) == [1, 2, 0]
    assert cyclic_shift(3, 3) == [0, 1, 2]
