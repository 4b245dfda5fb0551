"""
Tests for run configuration models and their validator.
"""
import math

import pytest
from pydantic import ValidationError

from pencil_lab.config.models import GridConfig, RunConfig
from pencil_lab.config.validator import RunConfigValidator


def make_config(**kwargs):
    values = {"spec_path": "spec.json", "command": "roots"}
    values.update(kwargs)
    return RunConfig.model_validate(values)


def test_defaults():
    """Test default parameters."""
    config = make_config()

    assert config.seed == 42
    assert config.format == "json"
    assert config.t_values() == [0.0]


def test_grid_syntax():
    """Test lo:hi:count parsing."""
    config = make_config(grid="-1:1:3")

    assert config.t_values() == [-1.0, 0.0, 1.0]
    with pytest.raises(ValueError):
        GridConfig.parse("0:1")


def test_vertices_and_center_syntax():
    """Test re,im parsing of loop parameters."""
    config = make_config(
        command="monodromy",
        vertices=["0,0", "2,0", "2,2.5", "0,0"],
        circle=None,
    )
    assert config.vertices[2] == (2.0, 2.5)

    config = make_config(command="monodromy", circle={"center": "0,1.9", "radius": 2.0})
    assert config.circle.center == (0.0, 1.9)


@pytest.mark.parametrize("field", ["t", "xi", "gamma", "tol"])
def test_non_finite_rejected(field):
    """Test that numeric parameters must be finite."""
    with pytest.raises(ValidationError):
        make_config(**{field: math.inf})
    with pytest.raises(ValidationError):
        make_config(**{field: math.nan})


def test_unknown_command_rejected():
    """Test that the command must be known."""
    with pytest.raises(ValidationError):
        make_config(command="plot")


def test_inputs_exclude_presentation():
    """Test that report inputs leave out format and threads."""
    inputs = make_config(format="csv", threads=3, t=1.5).inputs()

    assert "format" not in inputs
    assert "threads" not in inputs
    assert inputs["t"] == 1.5


def test_validator_accepts_valid_config():
    """Test a valid configuration."""
    assert RunConfigValidator().validate(make_config(t=1.0)) == []


def test_validator_monodromy_needs_loop():
    """Test that monodromy needs a circle or a polyline."""
    errors = RunConfigValidator().validate(make_config(command="monodromy"))

    assert errors == ["monodromy requires either --center/--radius or at least two --vertex values"]


def test_validator_gaussian_needs_gamma():
    """Test gaussian parameter checks."""
    errors = RunConfigValidator().validate(make_config(command="gaussian", count=1))

    assert "gaussian requires --gamma" in errors
    assert any("at least 2 nodes" in error for error in errors)


def test_validator_excon_limits():
    """Test excon point and trial limits."""
    errors = RunConfigValidator().validate(make_config(command="excon", points=17, trials=0))

    assert len(errors) == 2


def test_validator_t_and_grid():
    """Test that t and grid exclude each other."""
    errors = RunConfigValidator().validate(make_config(t=0.0, grid="0:1:2"))

    assert errors == ["Give either --t or --grid, not both"]
