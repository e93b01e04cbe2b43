"""Built-in acceptance suite: every δ route against its known value."""
import math
import time
from typing import Callable, Iterable

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from ..bodies import GraphBody, LpBall, Rectangle, Triangle, geometric_moments, lattice_array, simplex
from ..compacta import Ball, Disk, Polydisk, ProductSet, shilov_candidates
from ..formulas import (
    delta_ball_beta,
    delta_ball_gamma,
    delta_chebyshev,
    delta_product_general,
    delta_product_triangle,
    log_delta_ball_limit,
    rumely_log_delta,
)
from ..numerics import QuadratureRule, gamma_multiplication_rhs, integrate_1d, log_gamma
from ..utils.errors import CtdError
from ..vandermonde import delta_trend, fekete_brute_force, fekete_search, log_delta_ball_qn, richardson_log_delta

GROUPS = ("ball", "product", "fekete", "structure", "special")

LOG_DELTA_SIMPLEX = -0.25
LOG_DELTA_C2 = 0.5 * math.log(2.0) + math.log(math.sqrt(2.0) - 1.0) / math.sqrt(2.0)
LOG_DELTA_SQUARE = 1.0 / 6.0 - (2.0 / 3.0) * math.log(2.0)

# (label, measured, target, tolerance)
Check = tuple[str, float, float, float]


class Outcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    criterion: str
    group: str
    check: str
    measured: float
    target: float
    tolerance: float
    passed: bool
    seconds: float


def quarter_disk(samples: int = 129) -> GraphBody:
    """C_2 as the inscribed polygon through equally spaced angles."""
    phi = np.linspace(0.5 * math.pi, 0.0, samples)
    xs, fs = np.cos(phi), np.sin(phi)
    xs[0], fs[-1] = 0.0, 0.0
    return GraphBody(xs=tuple(xs), fs=tuple(fs))


class VerificationSuite:
    """Runs the acceptance criteria and reports one row per check."""

    def __init__(self, rule: QuadratureRule | None = None, tol_scale: float = 1.0, max_sweeps: int = 20):
        self.rule = rule or QuadratureRule()
        self.tol_scale = tol_scale
        self.max_sweeps = max_sweeps
        self.criteria: list[tuple[str, str, Callable[[], Iterable[Check]]]] = [
            ("ball-simplex", "ball", self._ball_simplex),
            ("ball-c2", "ball", self._ball_c2),
            ("ball-square", "ball", self._ball_square),
            ("gamma-consistency", "ball", self._gamma_consistency),
            ("qn-asymptotics", "ball", self._qn_asymptotics),
            ("product-triangle", "product", self._product_triangle),
            ("product-general", "product", self._product_general),
            ("fekete-trend", "fekete", self._fekete_trend),
            ("scaling-continuity", "ball", self._scaling_continuity),
            ("structural-asymptotics", "structure", self._structural),
            ("special-functions", "special", self._special_functions),
        ]

    def _ball_simplex(self):
        yield "chebyshev(simplex, ball)", delta_chebyshev(simplex(), Ball(), self.rule).log_delta, LOG_DELTA_SIMPLEX, 1e-6

    def _ball_c2(self):
        yield "beta(p=2)", delta_ball_beta(2.0, self.rule).log_delta, LOG_DELTA_C2, 1e-8
        yield "chebyshev(C_2, ball)", delta_chebyshev(LpBall(p=2.0), Ball(), self.rule).log_delta, LOG_DELTA_C2, 1e-6

    def _ball_square(self):
        yield "beta(p=inf)", delta_ball_beta(math.inf).log_delta, LOG_DELTA_SQUARE, 1e-10
        yield "beta(p=64)", delta_ball_beta(64.0, self.rule).log_delta, log_delta_ball_limit(), 5e-3

    def _gamma_consistency(self):
        for name, body, target in (("simplex", simplex(), LOG_DELTA_SIMPLEX),
                                   ("square", Rectangle(a=1.0, b=1.0), LOG_DELTA_SQUARE),
                                   ("C_2", LpBall(p=2.0), LOG_DELTA_C2)):
            raabe = delta_ball_gamma(body, self.rule, form="raabe").log_delta
            gamma = delta_ball_gamma(body, self.rule, form="gamma").log_delta
            yield f"gamma vs raabe ({name})", gamma, raabe, 1e-9
            yield f"raabe ({name})", raabe, target, 1e-6

    def _qn_asymptotics(self):
        yield "Q_n(simplex, 400)", log_delta_ball_qn(simplex(), 400), LOG_DELTA_SIMPLEX, 2e-2
        yield "Richardson(200, 400)", richardson_log_delta(simplex(), 400), LOG_DELTA_SIMPLEX, 2e-3

    def _product_triangle(self):
        value = delta_product_triangle(2.0, 1.0, 2.0, 0.5).log_delta
        yield "triangle(2,1; 2,1/2)", value, -math.log(2.0) / 3.0, 1e-14
        yield "rumely(2,1; -ln2, ln2)", rumely_log_delta(2.0, 1.0, -math.log(2.0), math.log(2.0)), value, 1e-14

    def _product_general(self):
        for p in (0.5, 1.0, 2.0, 3.0, math.inf):
            yield f"general(C_{p:g}; 4, 1)", delta_product_general(LpBall(p=p), 4.0, 1.0).log_delta, math.log(2.0), 1e-10
        rect = delta_product_general(Rectangle(a=1.0, b=2.0), 4.0, 1.0).log_delta
        yield "general(R_1,2; 4, 1)", rect, (2.0 / 3.0) * math.log(4.0), 1e-10

    def _fekete_trend(self):
        cases = (
            ("unit polydisk", Polydisk(r1=1.0, r2=1.0), simplex(), 0.0),
            ("unit polydisk", Polydisk(r1=1.0, r2=1.0), Triangle(a=2.0, b=1.0), 0.0),
            ("disk(2)xdisk(1/2)", ProductSet(E=Disk(r=2.0), F=Disk(r=0.5)), simplex(), 0.0),
            ("disk(2)xdisk(1/2)", ProductSet(E=Disk(r=2.0), F=Disk(r=0.5)), Triangle(a=2.0, b=1.0),
             -math.log(2.0) / 3.0),
        )
        for name, K, body, target in cases:
            for row in delta_trend(K, body, [1, 2, 3, 4], 16, self.max_sweeps):
                yield f"{name}, {body.kind}, n={row.n}", math.log(row.hadamard_estimate), target, 0.2
        torus = shilov_candidates(Polydisk(r1=1.0, r2=1.0), 4)
        for body in (simplex(), Rectangle(a=1.0, b=1.0)):
            greedy = fekete_search(torus, body, 1, self.max_sweeps).log_vdm
            exact = fekete_brute_force(torus, body, 1).log_vdm
            yield f"greedy vs exhaustive ({body.kind}, n=1)", greedy, exact, 1e-12

    def _scaling_continuity(self):
        base = delta_chebyshev(simplex(), Ball(), self.rule).log_delta
        for t in (0.5, 2.0, math.pi / 3.0):
            scaled = delta_chebyshev(simplex().scaled(t), Ball(), self.rule).log_delta
            yield f"scale t={t:.4g}", scaled, base, 1e-6
        for p in (1.0, 2.0, 3.0):
            step = 0.1
            here = delta_ball_beta(p, self.rule).log_delta
            there = delta_ball_beta(p + step, self.rule).log_delta
            yield f"lipschitz p={p:g}", abs(here - there), 0.0, 0.2 * step

    def _structural(self):
        bodies = (simplex(), Triangle(a=2.0, b=1.0), Rectangle(a=1.0, b=2.0),
                  LpBall(p=2.0), LpBall(p=0.5), quarter_disk())
        for body in bodies:
            moments = geometric_moments(body, self.rule)
            yield f"A + B = M_C ({body.kind})", (moments.face_a + moments.face_b) / moments.m_c, 1.0, 1e-9
            for n in (8, 16, 32, 64):
                points = lattice_array(body, n)
                ratio = points.sum() / (n * len(points))
                yield f"l_n/(n d_n) ({body.kind}, n={n})", ratio, moments.a_c, 2.0 / math.sqrt(n)

    def _special_functions(self):
        yield "log_gamma(1)", log_gamma(1.0), 0.0, 1e-13
        yield "log_gamma(1/2)", log_gamma(0.5), 0.5 * math.log(math.pi), 1e-13
        yield "log_gamma(6)", log_gamma(6.0), math.log(120.0), 1e-13
        raabe = integrate_1d(log_gamma, 0.0, 1.0, QuadratureRule(max_depth=48))
        yield "Raabe integral", raabe, 0.5 * math.log(2.0 * math.pi), 1e-9
        for z in (0.3, 0.7, 1.9):
            for n in (2, 3, 5):
                yield f"multiplication z={z}, n={n}", gamma_multiplication_rhs(z, n), log_gamma(n * z), 1e-10

    def run(self, only: str | None = None) -> list[Outcome]:
        """Run every criterion, or one group, and collect outcomes with timings."""
        outcomes = []
        for name, group, checks in self.criteria:
            if only and group != only:
                continue
            start = time.perf_counter()
            try:
                rows = list(checks())
            except CtdError as e:
                logger.error(f"Criterion {name} raised: {e}")
                rows = [(f"{name} error", math.nan, math.nan, math.nan)]
            elapsed = time.perf_counter() - start
            for label, measured, target, tol in rows:
                tolerance = tol * self.tol_scale
                passed = bool(abs(measured - target) <= tolerance)
                outcomes.append(Outcome(criterion=name, group=group, check=label, measured=measured,
                                        target=target, tolerance=tolerance, passed=passed,
                                        seconds=round(elapsed, 3)))
            logger.info(f"Criterion {name} finished in {elapsed:.2f}s")
        return outcomes
