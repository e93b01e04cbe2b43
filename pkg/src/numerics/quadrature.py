"""Deterministic adaptive Gauss-Legendre quadrature on intervals and graph regions.

Panels are always bisected and visited left first, so a fixed rule gives a
bit-stable result. Gauss rules are open, which lets integrands such as
x·ln x be evaluated without special casing the endpoints.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Callable, Sequence

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from ..utils.errors import NumericError

if TYPE_CHECKING:
    from ..bodies import BodySpec

Integrand = Callable[[np.ndarray], np.ndarray]
BodyIntegrand = Callable[[np.ndarray, np.ndarray], np.ndarray]


class QuadratureRule(BaseModel):
    """Gauss-Legendre panel rule with adaptivity parameters."""
    model_config = ConfigDict(frozen=True)

    panel_order: int = Field(default=32, ge=2, le=256)
    max_depth: int = Field(default=14, ge=1, le=60)
    rel_tol: float = Field(default=1e-11, gt=0.0, lt=1.0)
    abs_tol: float = Field(default=1e-15, gt=0.0)

    def nodes_weights(self) -> tuple[np.ndarray, np.ndarray]:
        return gauss_legendre(self.panel_order)


class QuadratureResult(BaseModel):
    """Integral value together with its accumulated error estimate."""
    model_config = ConfigDict(frozen=True)

    value: float
    residual: float = 0.0


@lru_cache(maxsize=8)
def gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on [-1, 1]; read-only and cached per order."""
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


@dataclass
class _Budget:
    tol: float
    residual: float = 0.0
    unresolved: float = 0.0
    exhausted: int = 0


def _panel(fn: Integrand, lo: float, hi: float, rule: QuadratureRule) -> np.ndarray:
    nodes, weights = rule.nodes_weights()
    half = 0.5 * (hi - lo)
    values = np.asarray(fn(0.5 * (hi + lo) + half * nodes), dtype=float)
    return half * (values @ weights)


def _refine(fn: Integrand, lo: float, hi: float, whole: np.ndarray,
            rule: QuadratureRule, budget: _Budget, depth: int) -> np.ndarray:
    mid = 0.5 * (lo + hi)
    left = _panel(fn, lo, mid, rule)
    right = _panel(fn, mid, hi, rule)
    refined = left + right
    err = float(np.max(np.abs(refined - whole)))
    if err <= budget.tol:
        budget.residual += err
        return refined
    if depth >= rule.max_depth or not np.isfinite(err):
        budget.residual += err
        budget.unresolved += err
        budget.exhausted += 1
        return refined
    return (_refine(fn, lo, mid, left, rule, budget, depth + 1)
            + _refine(fn, mid, hi, right, rule, budget, depth + 1))


def _adaptive(fn: Integrand, lo: float, hi: float, rule: QuadratureRule) -> tuple[np.ndarray, float]:
    whole = _panel(fn, lo, hi, rule)
    if hi == lo:
        return whole, 0.0
    budget = _Budget(tol=max(rule.rel_tol * float(np.max(np.abs(whole), initial=0.0)), rule.abs_tol))
    value = _refine(fn, lo, hi, whole, rule, budget, depth=1)
    scale = max(rule.rel_tol * float(np.max(np.abs(value), initial=0.0)), rule.abs_tol)
    if not np.all(np.isfinite(value)) or budget.unresolved > 10.0 * scale:
        logger.debug(f"Quadrature on [{lo}, {hi}] exhausted {budget.exhausted} panels at depth {rule.max_depth}")
        raise NumericError(f"adaptive quadrature on [{lo:g}, {hi:g}] did not converge",
                           residual=budget.unresolved)
    return value, budget.residual


def integrate_1d_with_residual(phi: Integrand, lo: float, hi: float,
                               rule: QuadratureRule | None = None) -> QuadratureResult:
    """∫_lo^hi φ together with the accumulated panel error estimate."""
    rule = rule or QuadratureRule()
    value, residual = _adaptive(phi, lo, hi, rule)
    return QuadratureResult(value=float(value), residual=residual)


def integrate_1d(phi: Integrand, lo: float, hi: float, rule: QuadratureRule | None = None) -> float:
    """∫_lo^hi φ for a vectorized φ."""
    return integrate_1d_with_residual(phi, lo, hi, rule).value


def integrate_piecewise_with_residual(phi: Integrand, knots: Sequence[float],
                                      rule: QuadratureRule | None = None) -> QuadratureResult:
    """Adaptive integrals over consecutive knot intervals, residuals summed."""
    rule = rule or QuadratureRule()
    total = 0.0
    residual = 0.0
    for lo, hi in zip(knots[:-1], knots[1:]):
        value, err = _adaptive(phi, float(lo), float(hi), rule)
        total += float(value)
        residual += err
    return QuadratureResult(value=total, residual=residual)


def integrate_piecewise(phi: Integrand, knots: Sequence[float], rule: QuadratureRule | None = None) -> float:
    """Sum of adaptive integrals over consecutive knot intervals."""
    return integrate_piecewise_with_residual(phi, knots, rule).value


def integrate_body_with_residual(body: "BodySpec", phi: BodyIntegrand,
                                 rule: QuadratureRule | None = None) -> QuadratureResult:
    """Iterated integral ∫₀^b ∫₀^{f(x)} φ(x, y) dy dx over the body's graph region.

    The inner integral is taken as f(x)·∫₀¹ φ(x, f(x)t) dt for all outer
    nodes of a panel at once; φ receives x of shape (m, 1) and y of shape (m, q).
    """
    rule = rule or QuadratureRule()
    inner_residual = 0.0

    def outer(xs: np.ndarray) -> np.ndarray:
        nonlocal inner_residual
        heights = np.asarray(body.profile(xs), dtype=float)
        column = xs[:, None]

        def inner(ts: np.ndarray) -> np.ndarray:
            ys = heights[:, None] * ts[None, :]
            return np.broadcast_to(phi(column, ys), ys.shape)

        values, err = _adaptive(inner, 0.0, 1.0, rule)
        inner_residual = max(inner_residual, err)
        return heights * values

    result = integrate_piecewise_with_residual(outer, body.knots, rule)
    extent = body.width * body.height
    return QuadratureResult(value=result.value, residual=result.residual + inner_residual * extent)


def integrate_body(body: "BodySpec", phi: BodyIntegrand, rule: QuadratureRule | None = None) -> float:
    """∫∫_C φ over the body."""
    return integrate_body_with_residual(body, phi, rule).value

