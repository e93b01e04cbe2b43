"""Bodies C ⊂ (ℝ⁺)², their lattices and geometric moments."""
from .lattice import (
    contains,
    deg_C,
    degrees_array,
    enumerate_lattice,
    gauge,
    geometric_moments,
    lattice_array,
    scale,
)
from .parsing import parse_body
from .spec import (
    CONTAINS_TOL,
    Body,
    BodySpec,
    GeometricMoments,
    GraphBody,
    LpBall,
    MultiIndex2,
    Rectangle,
    Triangle,
    sampled_body,
    simplex,
)

__all__ = [
    "CONTAINS_TOL",
    "Body",
    "BodySpec",
    "GeometricMoments",
    "GraphBody",
    "LpBall",
    "MultiIndex2",
    "Rectangle",
    "Triangle",
    "sampled_body",
    "simplex",
    "contains",
    "deg_C",
    "degrees_array",
    "enumerate_lattice",
    "gauge",
    "geometric_moments",
    "lattice_array",
    "scale",
    "parse_body",
]
