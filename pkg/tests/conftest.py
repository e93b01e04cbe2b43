import math

import numpy as np
import pytest
from loguru import logger
from scipy import special
from scipy.optimize import minimize_scalar

from src.bodies import LpBall, Rectangle, Triangle, simplex
from src.compacta import Ball, ModulusCurve, Polydisk, shilov_candidates
from src.numerics import QuadratureRule
from src.services import quarter_disk


@pytest.fixture
def rule():
    return QuadratureRule()


@pytest.fixture
def sigma():
    return simplex()


@pytest.fixture
def unit_ball():
    return Ball()


@pytest.fixture
def unit_polydisk():
    return Polydisk(r1=1.0, r2=1.0)


@pytest.fixture
def torus4(unit_polydisk):
    return shilov_candidates(unit_polydisk, 4)


@pytest.fixture
def c2_sampled():
    return quarter_disk()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def all_bodies(c2_sampled):
    return [simplex(), Triangle(a=2.0, b=1.0), Rectangle(a=1.0, b=2.0),
            LpBall(p=2.0), LpBall(p=0.5), LpBall(p=math.inf), c2_sampled]


@pytest.fixture
def profile_csv(tmp_path):
    path = tmp_path / "profile.csv"
    path.write_text("# x,f(x)\n0,1\n0.5,0.75\n1,0\n")
    return path


@pytest.fixture(autouse=True)
def _reset_logging():
    yield
    # sinks bound to captured streams must not outlive the test
    logger.remove()


@pytest.fixture
def polygon_curve():
    # concave outer boundary through (0, 1), (0.6, 0.8), (0.8, 0.6), (1, 0)
    return ModulusCurve(rs=(0.0, 0.6, 0.8, 1.0), hs=(1.0, 0.8, 0.6, 0.0))


@pytest.fixture
def two_polydisks():
    # {r1 ≤ 1, r2 ≤ 2} ∪ {r1 ≤ 2, r2 ≤ 1} joined by a steep segment
    return ModulusCurve(rs=(0.0, 1.0, 1.001, 2.0), hs=(2.0, 2.0, 1.0, 1.0))


def _segment_maximum(curve, theta1, theta2):
    """max of θ1 ln r1 + θ2 ln h(r1) by a bounded scalar search on every segment."""
    best = -math.inf
    for r_lo, r_hi, h_lo, h_hi in zip(curve.rs[:-1], curve.rs[1:], curve.hs[:-1], curve.hs[1:]):
        def value(r):
            height = h_lo + (h_hi - h_lo) * (r - r_lo) / (r_hi - r_lo)
            return float(special.xlogy(theta1, r) + special.xlogy(theta2, height))

        with np.errstate(divide="ignore"):
            found = minimize_scalar(lambda r: -value(r), bounds=(r_lo, r_hi), method="bounded",
                                    options={"xatol": 1e-13})
            best = max(best, value(r_lo), value(r_hi), -float(found.fun))
    return best


@pytest.fixture
def curve_maximum():
    return _segment_maximum
