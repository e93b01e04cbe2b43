"""Planar compacta E ⊂ ℂ and their univariate potential theory."""
from __future__ import annotations

import math
from typing import Literal, Union

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PrivateAttr, model_validator

from ..utils.errors import DomainError, UnsupportedVariantError


class Disk(BaseModel):
    model_config = ConfigDict(frozen=True)
    kind: Literal["disk"] = "disk"
    r: PositiveFloat


class Circle(BaseModel):
    model_config = ConfigDict(frozen=True)
    kind: Literal["circle"] = "circle"
    r: PositiveFloat


class Interval(BaseModel):
    model_config = ConfigDict(frozen=True)
    kind: Literal["interval"] = "interval"
    lo: float
    hi: float

    @model_validator(mode="after")
    def _check_order(self):
        if not self.lo < self.hi:
            raise DomainError(f"interval needs lo < hi, got [{self.lo}, {self.hi}]")
        return self

    @property
    def length(self) -> float:
        return self.hi - self.lo


class PointCloud(BaseModel):
    """Finite candidate set; never used as a capacity carrier."""
    model_config = ConfigDict(frozen=True)
    kind: Literal["points"] = "points"
    points: tuple[complex, ...] = Field(min_length=2)

    _z: np.ndarray = PrivateAttr()

    @model_validator(mode="after")
    def _check_distinct(self):
        if len(set(self.points)) < 2:
            raise DomainError("point cloud needs at least two distinct points")
        return self

    def model_post_init(self, __context) -> None:
        self._z = np.asarray(self.points, dtype=complex)

    @property
    def array(self) -> np.ndarray:
        return self._z


PlanarCompact = Union[Disk, Circle, Interval, PointCloud]


class ProductSet(BaseModel):
    """K = E × F ⊂ ℂ²."""
    model_config = ConfigDict(frozen=True)
    kind: Literal["product"] = "product"
    E: PlanarCompact = Field(discriminator="kind")
    F: PlanarCompact = Field(discriminator="kind")

    @property
    def is_circled(self) -> bool:
        return isinstance(self.E, (Disk, Circle)) and isinstance(self.F, (Disk, Circle))


class UnivariateFeketeResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    points: tuple[complex, ...]
    log_vdm: float
    estimate: float


def green(E: PlanarCompact, z) -> Union[float, np.ndarray]:
    """Green function of E with pole at infinity (Disk and Interval only)."""
    z = np.asarray(z, dtype=complex)
    if isinstance(E, Disk):
        with np.errstate(divide="ignore"):
            value = np.maximum(np.log(np.abs(z) / E.r), 0.0)
    elif isinstance(E, Interval):
        w = (2.0 * z - E.lo - E.hi) / E.length
        root = np.sqrt(w * w - 1.0)
        # |w + root|·|w − root| = 1; the larger one is the exterior branch
        big = np.maximum(np.abs(w + root), np.abs(w - root))
        value = np.maximum(np.log(big), 0.0)
    else:
        raise UnsupportedVariantError(f"no closed-form Green function for {E.kind}")
    return float(value) if value.ndim == 0 else value


def robin_constant(E: PlanarCompact) -> float:
    """ρ_E = lim g_E(z) − ln|z|."""
    if isinstance(E, Disk):
        return -math.log(E.r)
    if isinstance(E, Interval):
        return -math.log(E.length / 4.0)
    raise UnsupportedVariantError(f"no closed-form Robin constant for {E.kind}")


def transfinite_diameter_1d(E: PlanarCompact) -> float:
    """D(E) = exp(−ρ_E); a circle has the same diameter as its disk."""
    if isinstance(E, Circle):
        return E.r
    if isinstance(E, PointCloud):
        raise UnsupportedVariantError("a point cloud has zero capacity; use fekete_univariate")
    return math.exp(-robin_constant(E))


def _log_distances(z: np.ndarray, chosen: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.log(np.abs(z[:, None] - chosen[None, :]))


def fekete_univariate(candidates: PointCloud, N: int) -> UnivariateFeketeResult:
    """N-point Fekete approximation: Leja growth then exchange sweeps."""
    z = candidates.array
    if N < 2:
        raise DomainError(f"need N >= 2 points, got {N}")
    if np.unique(z).size < N:
        raise DomainError(f"{np.unique(z).size} distinct candidates cannot hold {N} points")

    picks = [int(np.argmax(np.abs(z)))]
    score = _log_distances(z, z[picks])[:, 0]
    while len(picks) < N:
        best = int(np.argmax(score))
        picks.append(best)
        score = score + _log_distances(z, z[[best]])[:, 0]

    sweeps = 0
    improved = True
    while improved:
        improved = False
        sweeps += 1
        for slot in range(N):
            others = np.array([p for k, p in enumerate(picks) if k != slot])
            gain = _log_distances(z, z[others]).sum(axis=1)
            current = gain[picks[slot]]
            best = int(np.argmax(gain))
            if gain[best] > current + 1e-12 * max(1.0, abs(current)):
                picks[slot] = best
                improved = True
    logger.debug(f"Univariate Fekete search for N={N} settled after {sweeps} sweeps")

    points = z[picks]
    upper = np.triu_indices(N, k=1)
    log_vdm = float(_log_distances(points, points)[upper].sum())
    estimate = math.exp(2.0 * log_vdm / (N * (N - 1)))
    return UnivariateFeketeResult(points=tuple(complex(p) for p in points), log_vdm=log_vdm, estimate=estimate)
