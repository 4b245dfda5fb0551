"""
Configuration models for pencil-lab.
"""
from typing import Annotated, Any, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator

from ..core.pencil_core import PencilSpec, new_pencil

COMMANDS = ("roots", "interlace", "detrep", "trace", "excon", "critical", "monodromy", "gaussian")

FiniteFloat = Annotated[float, Field(allow_inf_nan=False)]


def parse_complex(value: Any) -> Tuple[float, float]:
    """Parse 're,im' (or a number, or a pair) into a (real, imag) tuple."""
    if isinstance(value, str):
        parts = [part.strip() for part in value.split(",")]
        if len(parts) == 1:
            parts.append("0")
        if len(parts) != 2:
            raise ValueError(f"expected 're,im', got {value!r}")
        return float(parts[0]), float(parts[1])
    if isinstance(value, (int, float)):
        return float(value), 0.0
    return tuple(value)


class PencilSpecFile(BaseModel):
    """Pole locations and weights as read from a spec file."""
    mu: List[float]
    alpha: List[float]

    def to_spec(self) -> PencilSpec:
        """Validate and sort into a PencilSpec."""
        return new_pencil(self.mu, self.alpha)


class GridConfig(BaseModel):
    """Equally spaced grid lo:hi:count."""
    lo: FiniteFloat
    hi: FiniteFloat
    count: int = Field(ge=1)

    @classmethod
    def parse(cls, text: str) -> "GridConfig":
        """Parse 'lo:hi:count'."""
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"grid must look like lo:hi:count, got {text!r}")
        return cls(lo=float(parts[0]), hi=float(parts[1]), count=int(parts[2]))

    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.count)


class CircleConfig(BaseModel):
    """Circular loop in the parameter plane."""
    center: Tuple[FiniteFloat, FiniteFloat]
    radius: FiniteFloat = Field(gt=0)
    orientation: Literal[1, -1] = 1
    base_angle: Optional[FiniteFloat] = None
    turns: int = Field(default=1, ge=1)

    @field_validator("center", mode="before")
    @classmethod
    def _parse_center(cls, value: Any) -> Any:
        return parse_complex(value)


class RunConfig(BaseModel):
    """One command invocation with all of its parameters."""
    spec_path: str
    command: Literal[COMMANDS]
    t: Optional[FiniteFloat] = None
    grid: Optional[GridConfig] = None
    xi: Optional[FiniteFloat] = None
    gamma: Optional[FiniteFloat] = None
    points: int = 8
    trials: int = 50
    seed: int = 42
    tol: Optional[FiniteFloat] = None
    samples: int = 100
    sign: Literal[1, -1] = 1
    circle: Optional[CircleConfig] = None
    vertices: List[Tuple[FiniteFloat, FiniteFloat]] = Field(default_factory=list)
    steps: int = 256
    half_width: FiniteFloat = 12.0
    count: int = 2001
    format: Literal["json", "csv"] = "json"
    threads: Optional[int] = None
    timing: bool = False

    @field_validator("grid", mode="before")
    @classmethod
    def _parse_grid(cls, value: Any) -> Any:
        if isinstance(value, str):
            return GridConfig.parse(value)
        return value

    @field_validator("vertices", mode="before")
    @classmethod
    def _parse_vertices(cls, value: Any) -> Any:
        if value is None:
            return []
        return [parse_complex(vertex) for vertex in value]

    def t_values(self) -> List[float]:
        """Parameter values requested through t or grid; t = 0 when neither is given."""
        if self.grid is not None:
            return self.grid.values().tolist()
        return [0.0 if self.t is None else self.t]

    def inputs(self) -> dict:
        """Parameters echoed into reports; excludes presentation options."""
        return self.model_dump(exclude={"format", "threads", "timing"}, exclude_none=True)
