"""2-circled compacta in ℂ² and their directional Chebyshev constants.

For a circled set the minimal monic polynomial with leading exponent α is the
monomial z^α itself, so τ(K, θ) reduces to the maximum of r1^θ1 · r2^θ2 over
the modulus region.
"""
from __future__ import annotations

import math
from abc import abstractmethod
from typing import Literal, Sequence, Union

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PrivateAttr, model_validator
from scipy import special

from ..utils.errors import DomainError, UnsupportedVariantError
from .planar import Circle, Disk, Interval, PointCloud, ProductSet


class CircledSet2(BaseModel):
    """Complete 2-circled compact set described by its modulus region."""
    model_config = ConfigDict(frozen=True)

    @abstractmethod
    def log_tau_array(self, theta1, theta2) -> np.ndarray:
        """ln τ(K, θ) for nonnegative θ ≠ 0, continuous on the axes."""

    @abstractmethod
    def modulus_samples(self, count: int) -> np.ndarray:
        """(count, 2) moduli (|z1|, |z2|) along the outer boundary, in a fixed order."""

    def log_tau(self, theta1: float, theta2: float) -> float:
        return float(self.log_tau_array(np.array(theta1, dtype=float), np.array(theta2, dtype=float)))


class Ball(CircledSet2):
    """{|z1|² + |z2|² ≤ r²}."""
    kind: Literal["ball"] = "ball"
    r: PositiveFloat = 1.0

    def log_tau_array(self, theta1, theta2):
        t1 = np.asarray(theta1, dtype=float)
        t2 = np.asarray(theta2, dtype=float)
        s = t1 + t2
        safe = np.where(s > 0, s, 1.0)
        # xlogy gives 0·ln 0 = 0 on the axes
        value = 0.5 * (special.xlogy(t1, t1 / safe) + special.xlogy(t2, t2 / safe)) + s * math.log(self.r)
        return np.where(s > 0, value, 0.0)

    def modulus_samples(self, count):
        phi = np.linspace(0.0, 0.5 * math.pi, max(count, 2))
        return self.r * np.column_stack((np.cos(phi), np.sin(phi)))


class Polydisk(CircledSet2):
    kind: Literal["polydisk"] = "polydisk"
    r1: PositiveFloat
    r2: PositiveFloat

    def log_tau_array(self, theta1, theta2):
        return np.asarray(theta1, dtype=float) * math.log(self.r1) + np.asarray(theta2, dtype=float) * math.log(self.r2)

    def modulus_samples(self, count):
        return np.array([[self.r1, self.r2]])


class ModulusCurve(CircledSet2):
    """Modulus region under r2 = h(r1), h nonincreasing and piecewise linear on [0, r_max]."""
    kind: Literal["curve"] = "curve"
    rs: tuple[float, ...] = Field(min_length=2)
    hs: tuple[float, ...] = Field(min_length=2)

    _r: np.ndarray = PrivateAttr()
    _h: np.ndarray = PrivateAttr()
    _slope: np.ndarray = PrivateAttr()
    _intercept: np.ndarray = PrivateAttr()

    @model_validator(mode="before")
    @classmethod
    def _check_curve(cls, data):
        if not isinstance(data, dict):
            return data
        rs = np.asarray(data.get("rs", ()), dtype=float)
        hs = np.asarray(data.get("hs", ()), dtype=float)
        if rs.shape != hs.shape or rs.ndim != 1 or rs.size < 2:
            raise DomainError("modulus curve needs matching r1 and h(r1) columns")
        if rs[0] != 0.0 or np.any(np.diff(rs) <= 0):
            raise DomainError("modulus curve r1 values must start at 0 and increase strictly")
        if hs[0] <= 0 or np.any(hs < 0) or np.any(np.diff(hs) > 0):
            raise DomainError("modulus curve h must be nonincreasing from h(0) > 0")
        return data

    def model_post_init(self, __context) -> None:
        self._r = np.asarray(self.rs, dtype=float)
        self._h = np.asarray(self.hs, dtype=float)
        # segment k is h = c_k − m_k·r1 with m_k ≥ 0
        self._slope = -np.diff(self._h) / np.diff(self._r)
        self._intercept = self._h[:-1] + self._slope * self._r[:-1]
        logger.debug(f"Modulus curve with {self._slope.size} segments up to r1 = {self.r_max}")

    @property
    def r_max(self) -> float:
        return self.rs[-1]

    def h(self, r1) -> np.ndarray:
        return np.interp(r1, self._r, self._h)

    def log_tau_array(self, theta1, theta2):
        """Exact max of θ1 ln r1 + θ2 ln h(r1) over the polygonal curve.

        The objective is concave on each segment, so the segment maximum sits at
        the stationary point r* = θ1·c/(m(θ1 + θ2)) clipped to the segment.
        """
        t1, t2 = np.broadcast_arrays(np.asarray(theta1, dtype=float), np.asarray(theta2, dtype=float))
        s = t1 + t2
        safe = np.where(s > 0, s, 1.0)
        best = np.full(s.shape, -np.inf)
        with np.errstate(divide="ignore"):
            for k in range(self._slope.size):
                r_lo, r_hi = self._r[k], self._r[k + 1]
                m, c = self._slope[k], self._intercept[k]
                if m > 0:
                    rho = np.clip(t1 * c / (m * safe), r_lo, r_hi)
                else:
                    rho = np.full(s.shape, r_hi)
                # vertices take their tabulated heights so h(r_max) = 0 stays exact
                height = np.where(rho == r_hi, self._h[k + 1],
                                  np.where(rho == r_lo, self._h[k], np.maximum(c - m * rho, 0.0)))
                best = np.maximum(best, special.xlogy(t1, rho) + special.xlogy(t2, height))
        return np.where(s > 0, best, 0.0)

    def modulus_samples(self, count):
        rho = np.linspace(0.0, self.r_max, max(count, 2))
        return np.column_stack((rho, self.h(rho)))


def as_circled(K: Union[CircledSet2, ProductSet]) -> CircledSet2:
    """View a product of disks or circles as a polydisk; reject non-circled sets."""
    if isinstance(K, CircledSet2):
        return K
    if isinstance(K, ProductSet) and K.is_circled:
        return Polydisk(r1=K.E.r, r2=K.F.r)
    raise UnsupportedVariantError(f"{getattr(K, 'kind', type(K).__name__)} set is not circled")


def tau_circled(K: Union[CircledSet2, ProductSet], theta: Sequence[float]) -> float:
    """Directional Chebyshev constant max_K |z1|^θ1 |z2|^θ2."""
    t1, t2 = (float(t) for t in theta)
    if t1 < 0 or t2 < 0 or t1 + t2 == 0:
        raise DomainError(f"direction must be nonnegative and nonzero, got ({t1}, {t2})")
    return math.exp(as_circled(K).log_tau(t1, t2))


def sup_norm_monomial(K: Union[CircledSet2, ProductSet], alpha) -> float:
    """‖z^α‖_K, which is also the least sup-norm among monic polynomials with leading term z^α."""
    j1, j2 = (alpha.j1, alpha.j2) if hasattr(alpha, "j1") else alpha
    circled = as_circled(K)
    if j1 + j2 == 0:
        return 1.0
    return math.exp(circled.log_tau(float(j1), float(j2)))


def _roots_of_unity(resolution: int) -> np.ndarray:
    return np.exp(2j * math.pi * np.arange(resolution) / resolution)


def _factor_points(E, resolution: int) -> np.ndarray:
    if isinstance(E, (Disk, Circle)):
        return E.r * _roots_of_unity(resolution)
    if isinstance(E, Interval):
        # Chebyshev-Lobatto points crowd the endpoints like the equilibrium measure
        mid, half = 0.5 * (E.lo + E.hi), 0.5 * (E.hi - E.lo)
        return (mid + half * np.cos(math.pi * np.arange(resolution) / (resolution - 1))).astype(complex)
    if isinstance(E, PointCloud):
        return E.array
    raise UnsupportedVariantError(f"no candidate points for {type(E).__name__}")


def shilov_candidates(K: Union[CircledSet2, ProductSet], resolution: int) -> np.ndarray:
    """Deterministic (N, 2) complex candidate grid on the distinguished boundary of K."""
    if resolution < 4:
        raise DomainError(f"candidate resolution must be >= 4, got {resolution}")
    if isinstance(K, ProductSet):
        first, second = _factor_points(K.E, resolution), _factor_points(K.F, resolution)
    elif isinstance(K, Polydisk):
        first, second = K.r1 * _roots_of_unity(resolution), K.r2 * _roots_of_unity(resolution)
    elif isinstance(K, CircledSet2):
        moduli = K.modulus_samples(resolution // 4)
        angles = _roots_of_unity(resolution)
        z1 = moduli[:, 0, None, None] * angles[None, :, None]
        z2 = moduli[:, 1, None, None] * angles[None, None, :]
        z1, z2 = np.broadcast_arrays(z1, z2)
        return np.column_stack((z1.ravel(), z2.ravel()))
    else:
        raise UnsupportedVariantError(f"no candidate grid for {type(K).__name__}")
    z1, z2 = np.meshgrid(first, second, indexing="ij")
    return np.column_stack((z1.ravel(), z2.ravel()))
