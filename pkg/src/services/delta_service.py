"""Route dispatch for δ_C evaluations."""
import math
from itertools import combinations
from typing import Literal, Union

from loguru import logger

from ..bodies import Body, LpBall, Rectangle, Triangle
from ..compacta import Ball, CircledSet2, Disk, Interval, Polydisk, ProductSet, transfinite_diameter_1d
from ..formulas import (
    DeltaResult,
    Route,
    delta_ball_beta,
    delta_ball_gamma,
    delta_chebyshev,
    delta_product_general,
    delta_product_triangle,
    delta_rumely,
)
from ..numerics import QuadratureRule
from ..utils.errors import NumericError, RouteMismatchError

CompactSet = Union[CircledSet2, ProductSet]


class DeltaService:
    """Decides which routes apply to a (body, set) pair and evaluates them."""

    def __init__(self, rule: QuadratureRule | None = None, form: Literal["gamma", "raabe"] = "raabe"):
        self.rule = rule or QuadratureRule()
        self.form = form

    @staticmethod
    def _factors(K: CompactSet):
        if isinstance(K, Polydisk):
            return Disk(r=K.r1), Disk(r=K.r2)
        if isinstance(K, ProductSet):
            return K.E, K.F
        return None

    @staticmethod
    def _is_circled(K: CompactSet) -> bool:
        return isinstance(K, CircledSet2) or (isinstance(K, ProductSet) and K.is_circled)

    @staticmethod
    def beta_exponent(body: Body) -> float | None:
        """p with body = t·C_p for some t > 0, or None."""
        if isinstance(body, LpBall):
            return body.p
        if isinstance(body, Triangle) and body.a == body.b:
            return 1.0
        if isinstance(body, Rectangle) and body.a == body.b:
            return math.inf
        return None

    def applicable_routes(self, body: Body, K: CompactSet) -> list[Route]:
        """Routes defined for this body/set pair, in report order."""
        routes = []
        factors = self._factors(K)
        if self._is_circled(K):
            routes.append(Route.CHEBYSHEV)
        if factors is not None:
            if isinstance(body, Triangle):
                routes.append(Route.PRODUCT_TRIANGLE)
            routes.append(Route.PRODUCT_GENERAL)
            if isinstance(body, Triangle) and all(isinstance(f, (Disk, Interval)) for f in factors):
                routes.append(Route.RUMELY)
        if isinstance(K, Ball):
            if self.beta_exponent(body) is not None:
                routes.append(Route.BALL_BETA)
            routes.append(Route.BALL_GAMMA)
        return routes

    def product_diameters(self, K: CompactSet) -> tuple[float, float]:
        """Transfinite diameters of the two factors."""
        E, F = self._factors(K)
        return transfinite_diameter_1d(E), transfinite_diameter_1d(F)

    def evaluate(self, body: Body, K: CompactSet, route: Route) -> DeltaResult:
        """Evaluate one route; raises RouteMismatchError when it does not apply."""
        route = Route(route)
        if route not in self.applicable_routes(body, K):
            raise RouteMismatchError(f"route {route.value} does not apply to {body.kind} with {K.kind}")
        logger.info(f"Evaluating {route.value} for {body.kind} on {K.kind}")
        try:
            if route is Route.CHEBYSHEV:
                return delta_chebyshev(body, K, self.rule)
            if route is Route.PRODUCT_TRIANGLE:
                DE, DF = self.product_diameters(K)
                return delta_product_triangle(body.a, body.b, DE, DF)
            if route is Route.PRODUCT_GENERAL:
                DE, DF = self.product_diameters(K)
                return delta_product_general(body, DE, DF)
            if route is Route.RUMELY:
                E, F = self._factors(K)
                return delta_rumely(body.a, body.b, E, F)
            if route is Route.BALL_BETA:
                return delta_ball_beta(self.beta_exponent(body), self.rule, radius=K.r)
            return delta_ball_gamma(body, self.rule, form=self.form, radius=K.r)
        except NumericError as e:
            logger.error(f"Route {route.value} failed: {e}")
            raise

    def evaluate_all(self, body: Body, K: CompactSet) -> tuple[list[DeltaResult], list[NumericError]]:
        """Every applicable route; numeric failures are collected instead of aborting."""
        results, failures = [], []
        for route in self.applicable_routes(body, K):
            try:
                results.append(self.evaluate(body, K, route))
            except NumericError as e:
                failures.append(e)
        return results, failures

    @staticmethod
    def spread(results: list[DeltaResult]) -> float:
        """Largest pairwise |Δ log_delta|."""
        return max((abs(a.log_delta - b.log_delta) for a, b in combinations(results, 2)), default=0.0)

    def target(self, body: Body, K: CompactSet) -> DeltaResult:
        """Best closed-form (or lowest-error) route for the pair."""
        routes = self.applicable_routes(body, K)
        for preferred in (Route.BALL_BETA, Route.PRODUCT_GENERAL, Route.BALL_GAMMA, Route.CHEBYSHEV):
            if preferred in routes:
                return self.evaluate(body, K, preferred)
        raise RouteMismatchError(f"no closed-form route for {body.kind} with {K.kind}")
