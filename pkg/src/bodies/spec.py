"""Bodies C ⊂ (ℝ⁺)² and lattice exponents."""
from __future__ import annotations

import math
from abc import abstractmethod
from typing import Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveFloat, PrivateAttr, model_validator

from ..numerics import QuadratureRule, integrate_piecewise, log_beta
from ..utils.errors import DomainError

# Boundary tolerance on the defining inequality of every variant.
CONTAINS_TOL = 1e-12

_BISECTION_STEPS = 96
# Dyadic levels of knot grading toward the ends of a curved profile.
_GRADED_LEVELS = 40


class MultiIndex2(BaseModel):
    """Exponent α = (j1, j2) ∈ ℕ², ordered graded-lexicographically."""
    model_config = ConfigDict(frozen=True)

    j1: NonNegativeInt
    j2: NonNegativeInt

    @property
    def degree(self) -> int:
        return self.j1 + self.j2

    def grlex_key(self) -> tuple[int, int, int]:
        return (self.degree, self.j1, self.j2)

    def __lt__(self, other: "MultiIndex2") -> bool:
        return self.grlex_key() < other.grlex_key()

    def as_tuple(self) -> tuple[int, int]:
        return (self.j1, self.j2)


class GeometricMoments(BaseModel):
    """vol, M_C = ∫∫(x+y), A_C = M_C/vol and the face integrals A = ∫x f, B = ∫y g."""
    model_config = ConfigDict(frozen=True)

    vol: float
    m_c: float
    a_c: float
    face_a: float
    face_b: float


class BodySpec(BaseModel):
    """A lower-set body with extreme points (width, 0) and (0, height)."""
    model_config = ConfigDict(frozen=True)

    @property
    @abstractmethod
    def width(self) -> float:
        """b: extent along the first axis."""

    @property
    @abstractmethod
    def height(self) -> float:
        """a: extent along the second axis."""

    @property
    def convex(self) -> bool:
        return True

    @property
    def lower_set(self) -> bool:
        return True

    @property
    def knots(self) -> tuple[float, ...]:
        """Breakpoints of the outer profile on [0, width]."""
        return (0.0, self.width)

    @abstractmethod
    def contains_array(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Vectorized membership for nonnegative coordinates."""

    @abstractmethod
    def gauge_array(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Vectorized inf{t > 0 : (x, y)/t ∈ C}."""

    @abstractmethod
    def profile(self, xs: np.ndarray) -> np.ndarray:
        """f: the outer face as a graph over the first axis (0 beyond width)."""

    @abstractmethod
    def inverse_profile(self, ys: np.ndarray) -> np.ndarray:
        """g: the outer face as a graph over the second axis (0 beyond height)."""

    @abstractmethod
    def simplex_bounds(self) -> tuple[float, float]:
        """(ε, δ) with εΣ ⊂ C ⊂ δΣ."""

    @abstractmethod
    def scaled(self, t: float) -> "BodySpec":
        """The dilate tC in the same variant family."""

    @abstractmethod
    def moments(self, rule: QuadratureRule | None = None) -> GeometricMoments:
        """Volume, M_C, A_C and face integrals."""

    @model_validator(mode="after")
    def _check_pinched(self):
        eps, delta = self.simplex_bounds()
        if not (eps > 0 and math.isfinite(delta) and eps <= delta * (1 + 1e-12)):
            raise DomainError(f"body {self!r} is not pinched between simplices: eps={eps}, delta={delta}")
        return self


class Triangle(BodySpec):
    """T_{a,b}: vertices (0,0), (b,0), (0,a)."""
    kind: Literal["triangle"] = "triangle"
    a: PositiveFloat
    b: PositiveFloat

    @property
    def width(self) -> float:
        return self.b

    @property
    def height(self) -> float:
        return self.a

    def contains_array(self, xs, ys):
        return np.asarray(xs) / self.b + np.asarray(ys) / self.a <= 1.0 + CONTAINS_TOL

    def gauge_array(self, xs, ys):
        return np.asarray(xs, dtype=float) / self.b + np.asarray(ys, dtype=float) / self.a

    def profile(self, xs):
        return np.clip(self.a * (1.0 - np.asarray(xs, dtype=float) / self.b), 0.0, None)

    def inverse_profile(self, ys):
        return np.clip(self.b * (1.0 - np.asarray(ys, dtype=float) / self.a), 0.0, None)

    def simplex_bounds(self):
        return (min(self.a, self.b), max(self.a, self.b))

    def scaled(self, t):
        return Triangle(a=t * self.a, b=t * self.b)

    def moments(self, rule=None):
        a, b = self.a, self.b
        vol = a * b / 2.0
        m_c = a * b * (a + b) / 6.0
        return GeometricMoments(vol=vol, m_c=m_c, a_c=m_c / vol,
                                face_a=a * b * b / 6.0, face_b=a * a * b / 6.0)


class Rectangle(BodySpec):
    """R_{a,b}: vertices (0,0), (b,0), (b,a), (0,a)."""
    kind: Literal["rectangle"] = "rectangle"
    a: PositiveFloat
    b: PositiveFloat

    @property
    def width(self) -> float:
        return self.b

    @property
    def height(self) -> float:
        return self.a

    def contains_array(self, xs, ys):
        return ((np.asarray(xs) / self.b <= 1.0 + CONTAINS_TOL)
                & (np.asarray(ys) / self.a <= 1.0 + CONTAINS_TOL))

    def gauge_array(self, xs, ys):
        return np.maximum(np.asarray(xs, dtype=float) / self.b, np.asarray(ys, dtype=float) / self.a)

    def profile(self, xs):
        xs = np.asarray(xs, dtype=float)
        return np.where(xs <= self.b, self.a, 0.0)

    def inverse_profile(self, ys):
        ys = np.asarray(ys, dtype=float)
        return np.where(ys <= self.a, self.b, 0.0)

    def simplex_bounds(self):
        return (min(self.a, self.b), self.a + self.b)

    def scaled(self, t):
        return Rectangle(a=t * self.a, b=t * self.b)

    def moments(self, rule=None):
        a, b = self.a, self.b
        vol = a * b
        m_c = a * b * (a + b) / 2.0
        return GeometricMoments(vol=vol, m_c=m_c, a_c=m_c / vol,
                                face_a=a * b * b / 2.0, face_b=a * a * b / 2.0)


class LpBall(BodySpec):
    """C_p = {x, y ≥ 0 : x^p + y^p ≤ r^p}; p = inf is the square [0, r]²."""
    kind: Literal["lp"] = "lp"
    p: PositiveFloat
    radius: PositiveFloat = 1.0

    @property
    def width(self) -> float:
        return self.radius

    @property
    def height(self) -> float:
        return self.radius

    @property
    def convex(self) -> bool:
        return self.p >= 1.0

    @property
    def is_square(self) -> bool:
        return math.isinf(self.p)

    @property
    def knots(self) -> tuple[float, ...]:
        if self.is_square or self.p == 1.0:
            return (0.0, self.radius)
        # f behaves like (r − x)^{1/p} or like x^p at the ends; dyadic knots resolve both
        levels = 2.0 ** -np.arange(_GRADED_LEVELS, 0, -1)
        inner = np.concatenate(([0.0], levels, 1.0 - levels[-2::-1], [1.0]))
        return tuple(float(k) for k in self.radius * inner)

    def _norm(self, xs, ys):
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)
        big = np.maximum(xs, ys)
        if self.is_square:
            return big
        safe = np.where(big > 0, big, 1.0)
        inner = (xs / safe) ** self.p + (ys / safe) ** self.p
        return np.where(big > 0, big * inner ** (1.0 / self.p), 0.0)

    def contains_array(self, xs, ys):
        if self.is_square:
            return self._norm(xs, ys) / self.radius <= 1.0 + CONTAINS_TOL
        xs = np.asarray(xs, dtype=float) / self.radius
        ys = np.asarray(ys, dtype=float) / self.radius
        return xs ** self.p + ys ** self.p <= 1.0 + CONTAINS_TOL

    def gauge_array(self, xs, ys):
        return self._norm(xs, ys) / self.radius

    def profile(self, xs):
        xs = np.asarray(xs, dtype=float)
        if self.is_square:
            return np.where(xs <= self.radius, self.radius, 0.0)
        u = np.clip(xs / self.radius, 0.0, 1.0)
        return self.radius * (1.0 - u ** self.p) ** (1.0 / self.p)

    def inverse_profile(self, ys):
        return self.profile(ys)

    def simplex_bounds(self):
        r = self.radius
        if self.is_square:
            return (r, 2.0 * r)
        corner = r * 2.0 ** (1.0 - 1.0 / self.p)
        return (r, corner) if self.p >= 1.0 else (corner, r)

    def scaled(self, t):
        return LpBall(p=self.p, radius=t * self.radius)

    def moments(self, rule=None):
        r = self.radius
        if self.is_square:
            vol, face = r * r, r ** 3 / 2.0
        else:
            p = self.p
            vol = r * r * math.exp(log_beta(1.0 / p, 1.0 / p)) / (2.0 * p)
            face = r ** 3 * math.exp(log_beta(1.0 / p, 2.0 / p)) / (3.0 * p)
        m_c = 2.0 * face
        return GeometricMoments(vol=vol, m_c=m_c, a_c=m_c / vol, face_a=face, face_b=face)


class GraphBody(BodySpec):
    """Body under a nonincreasing concave piecewise-linear profile f with f(0) = a, f(b) = 0."""
    kind: Literal["graph"] = "graph"
    xs: tuple[float, ...] = Field(min_length=2)
    fs: tuple[float, ...] = Field(min_length=2)

    _x: np.ndarray = PrivateAttr()
    _f: np.ndarray = PrivateAttr()

    @model_validator(mode="before")
    @classmethod
    def _check_table(cls, data):
        if not isinstance(data, dict):
            return data
        xs = np.asarray(data.get("xs", ()), dtype=float)
        fs = np.asarray(data.get("fs", ()), dtype=float)
        if xs.shape != fs.shape or xs.ndim != 1 or xs.size < 2:
            raise DomainError("profile table needs matching x and f(x) columns with at least two rows")
        if xs[0] != 0.0 or np.any(np.diff(xs) <= 0):
            raise DomainError("profile x values must start at 0 and increase strictly")
        if fs[0] <= 0 or fs[-1] != 0.0 or np.any(fs < 0) or np.any(np.diff(fs) > 0):
            raise DomainError("profile must be nonincreasing from f(0) > 0 down to f(b) = 0")
        # midpoint concavity scan over consecutive triples
        if xs.size >= 3:
            chord = fs[:-2] + (fs[2:] - fs[:-2]) * (xs[1:-1] - xs[:-2]) / (xs[2:] - xs[:-2])
            if np.any(fs[1:-1] < chord - 1e-12 * fs[0]):
                raise DomainError("profile is not concave; only C_p with p < 1 may be nonconvex")
        return data

    def model_post_init(self, __context) -> None:
        self._x = np.asarray(self.xs, dtype=float)
        self._f = np.asarray(self.fs, dtype=float)

    @property
    def width(self) -> float:
        return self.xs[-1]

    @property
    def height(self) -> float:
        return self.fs[0]

    @property
    def knots(self) -> tuple[float, ...]:
        return self.xs

    def profile(self, xs):
        xs = np.asarray(xs, dtype=float)
        return np.interp(xs, self._x, self._f, left=self._f[0], right=0.0)

    def inverse_profile(self, ys):
        ys = np.asarray(ys, dtype=float)
        fs = self._f
        # last sample with f >= y; flat stretches resolve to their right end
        k = np.searchsorted(-fs, -ys, side="right") - 1
        k = np.clip(k, 0, fs.size - 1)
        nxt = np.minimum(k + 1, fs.size - 1)
        drop = fs[k] - fs[nxt]
        frac = np.where(drop > 0, (fs[k] - ys) / np.where(drop > 0, drop, 1.0), 0.0)
        g = self._x[k] + frac * (self._x[nxt] - self._x[k])
        return np.where(ys > fs[0], 0.0, np.where(k == fs.size - 1, self._x[-1], g))

    def contains_array(self, xs, ys):
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)
        inside_x = xs <= self.width * (1.0 + CONTAINS_TOL)
        return inside_x & (ys <= self.profile(np.minimum(xs, self.width)) + CONTAINS_TOL * self.height)

    def gauge_array(self, xs, ys):
        xs = np.asarray(xs, dtype=float)
        ys = np.asarray(ys, dtype=float)
        eps, delta = self.simplex_bounds()
        total = xs + ys
        lo = total / delta
        hi = total / eps
        positive = total > 0
        for _ in range(_BISECTION_STEPS):
            mid = 0.5 * (lo + hi)
            safe = np.where(positive, mid, 1.0)
            px, py = xs / safe, ys / safe
            inside = (px <= self.width) & (py <= self.profile(np.minimum(px, self.width)))
            hi = np.where(inside, mid, hi)
            lo = np.where(inside, lo, mid)
        return np.where(positive, hi, 0.0)

    def simplex_bounds(self):
        return (min(self.width, self.height), float(np.max(np.asarray(self.xs) + np.asarray(self.fs))))

    def scaled(self, t):
        return GraphBody(xs=tuple(t * x for x in self.xs), fs=tuple(t * f for f in self.fs))

    def moments(self, rule=None):
        vol = integrate_piecewise(self.profile, self.xs, rule)
        face_a = integrate_piecewise(lambda x: x * self.profile(x), self.xs, rule)
        levels = np.unique(self._f)
        face_b = integrate_piecewise(lambda y: y * self.inverse_profile(y), tuple(levels), rule)
        m_c = integrate_piecewise(lambda x: x * self.profile(x) + 0.5 * self.profile(x) ** 2, self.xs, rule)
        return GeometricMoments(vol=vol, m_c=m_c, a_c=m_c / vol, face_a=face_a, face_b=face_b)


Body = Union[Triangle, Rectangle, LpBall, GraphBody]


def simplex() -> Triangle:
    """Σ, the standard simplex."""
    return Triangle(a=1.0, b=1.0)


def sampled_body(profile, width: float, samples: int = 129) -> GraphBody:
    """GraphBody through `samples` equispaced points of a concave profile on [0, width]."""
    if samples < 2:
        raise DomainError(f"need at least two samples, got {samples}")
    xs = np.linspace(0.0, width, samples)
    fs = np.clip(np.asarray(profile(xs), dtype=float), 0.0, None)
    fs[-1] = 0.0
    return GraphBody(xs=tuple(float(x) for x in xs), fs=tuple(float(f) for f in fs))
