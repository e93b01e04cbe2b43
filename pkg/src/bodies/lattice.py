"""Membership, gauge and lattice queries on bodies."""
from __future__ import annotations

import math
from typing import Sequence, Union

import numpy as np
from loguru import logger

from ..numerics import QuadratureRule
from ..utils.errors import DomainError
from .spec import BodySpec, GeometricMoments, MultiIndex2

Pair = Union[MultiIndex2, Sequence[float]]

# Gauge values this close to an integer count as that integer.
DEGREE_SNAP = 1e-9


def _coords(point: Pair) -> tuple[float, float]:
    if isinstance(point, MultiIndex2):
        return float(point.j1), float(point.j2)
    x, y = point
    if x < 0 or y < 0:
        raise DomainError(f"coordinates must be nonnegative, got ({x}, {y})")
    return float(x), float(y)


def contains(body: BodySpec, point: Pair) -> bool:
    """Membership of a nonnegative point, boundary decided within CONTAINS_TOL."""
    x, y = _coords(point)
    return bool(body.contains_array(np.array(x), np.array(y)))


def gauge(body: BodySpec, alpha: Pair) -> float:
    """inf{t > 0 : α/t ∈ C}; 0 at the origin."""
    x, y = _coords(alpha)
    return float(body.gauge_array(np.array(x), np.array(y)))


def _snap_ceil(values: np.ndarray) -> np.ndarray:
    nearest = np.rint(values)
    snapped = np.where(np.abs(values - nearest) <= DEGREE_SNAP, nearest, values)
    return np.ceil(snapped).astype(np.int64)


def deg_C(body: BodySpec, alpha: Pair) -> int:
    """C-degree of the monomial z^α: the snapped ceiling of the gauge."""
    return int(_snap_ceil(np.array(gauge(body, alpha))))


def degrees_array(body: BodySpec, indices: np.ndarray) -> np.ndarray:
    """deg_C for every row of an (m, 2) exponent array."""
    indices = np.asarray(indices)
    return _snap_ceil(body.gauge_array(indices[:, 0].astype(float), indices[:, 1].astype(float)))


def lattice_array(body: BodySpec, n: int) -> np.ndarray:
    """nC ∩ ℕ² as an (d_n, 2) integer array in grlex order."""
    if n < 1:
        raise DomainError(f"dilation n must be >= 1, got {n}")
    top_x = math.ceil(n * body.width - DEGREE_SNAP)
    top_y = math.ceil(n * body.height - DEGREE_SNAP)
    j1, j2 = np.meshgrid(np.arange(top_x + 1), np.arange(top_y + 1), indexing="ij")
    j1, j2 = j1.ravel(), j2.ravel()
    keep = body.contains_array(j1 / n, j2 / n)
    j1, j2 = j1[keep], j2[keep]
    order = np.lexsort((j2, j1, j1 + j2))
    points = np.column_stack((j1[order], j2[order])).astype(np.int64)
    logger.debug(f"Lattice of {n}·{body.kind} has {len(points)} points")
    return points


def enumerate_lattice(body: BodySpec, n: int) -> list[MultiIndex2]:
    """nC ∩ ℕ² in grlex order as multi-indices."""
    return [MultiIndex2(j1=int(a), j2=int(b)) for a, b in lattice_array(body, n)]


def geometric_moments(body: BodySpec, rule: QuadratureRule | None = None) -> GeometricMoments:
    """vol, M_C = ∫∫(x + y), A_C and the face integrals A, B."""
    return body.moments(rule)


def scale(body: BodySpec, t: float) -> BodySpec:
    """The dilate tC; gauge(tC, α) = gauge(C, α)/t."""
    if not t > 0:
        raise DomainError(f"scale factor must be positive, got {t}")
    return body.scaled(t)
