"""Compacta in ℂ and ℂ²."""
from .circled import (
    Ball,
    CircledSet2,
    ModulusCurve,
    Polydisk,
    as_circled,
    shilov_candidates,
    sup_norm_monomial,
    tau_circled,
)
from .parsing import parse_factor, parse_set
from .planar import (
    Circle,
    Disk,
    Interval,
    PlanarCompact,
    PointCloud,
    ProductSet,
    UnivariateFeketeResult,
    fekete_univariate,
    green,
    robin_constant,
    transfinite_diameter_1d,
)

__all__ = [
    "Ball",
    "CircledSet2",
    "ModulusCurve",
    "Polydisk",
    "as_circled",
    "shilov_candidates",
    "sup_norm_monomial",
    "tau_circled",
    "parse_factor",
    "parse_set",
    "Circle",
    "Disk",
    "Interval",
    "PlanarCompact",
    "PointCloud",
    "ProductSet",
    "UnivariateFeketeResult",
    "fekete_univariate",
    "green",
    "robin_constant",
    "transfinite_diameter_1d",
]
