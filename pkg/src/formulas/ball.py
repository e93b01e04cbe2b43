"""δ_C of the Euclidean ball: Beta closed form for C_p and the log-Gamma triple integrals."""
import math
from typing import Literal

import numpy as np
from loguru import logger
from scipy import special

from ..bodies import Body, LpBall, geometric_moments
from ..numerics import (
    QuadratureRule,
    integrate_body_with_residual,
    log_beta,
    raabe_antiderivative,
)
from ..utils.errors import DomainError
from .results import DeltaResult, Route

HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

# Elementary integrals over the unit square.
_SQUARE_X_LOG_X = -0.25
_SQUARE_X_LOG_SUM = (2.0 / 3.0) * math.log(2.0) - 5.0 / 12.0


def log_delta_ball_limit() -> float:
    """p → ∞ limit of ln δ_{C_p}(𝔹): (1 − 4 ln 2)/6."""
    return (1.0 - 4.0 * math.log(2.0)) / 6.0


def _check_radius(radius: float) -> float:
    if not radius > 0:
        raise DomainError(f"ball radius must be positive, got {radius}")
    return math.log(radius)


def delta_ball_beta(p: float, rule: QuadratureRule | None = None, radius: float = 1.0) -> DeltaResult:
    """ln δ_{C_p}(r𝔹) = 3p/(2B(1/p, 2/p)) · (∫∫ x ln x − ∫∫ x ln(x + y)) + ln r."""
    log_r = _check_radius(radius)
    if not p > 0:
        raise DomainError(f"p must be positive, got {p}")
    if math.isinf(p):
        return DeltaResult.from_log(Route.BALL_BETA, _SQUARE_X_LOG_X - _SQUARE_X_LOG_SUM + log_r)
    body = LpBall(p=p)
    x_log_x = integrate_body_with_residual(body, lambda x, y: special.xlogy(x, x), rule)
    x_log_sum = integrate_body_with_residual(body, lambda x, y: special.xlogy(x, x + y), rule)
    prefactor = 3.0 * p / (2.0 * math.exp(log_beta(1.0 / p, 2.0 / p)))
    value = prefactor * (x_log_x.value - x_log_sum.value)
    residual = prefactor * (x_log_x.residual + x_log_sum.residual)
    logger.debug(f"Beta route at p={p}: log delta = {value:.12g}")
    return DeltaResult.from_log(Route.BALL_BETA, value + log_r, residual)


def _log_gamma_mean(w: np.ndarray, rule: QuadratureRule | None) -> np.ndarray:
    """∫₀¹ ln Γ(w + z) dz for w ≥ 0, through ln Γ(w + z) = ln Γ(1 + w + z) − ln(w + z).

    ln Γ(1 + w + z) is analytic on a neighbourhood of [0, 1] reaching to z = −1,
    so one Gauss panel integrates it to rounding.
    """
    w = np.asarray(w, dtype=float)
    nodes, weights = (rule or QuadratureRule()).nodes_weights()
    z = 0.5 * (nodes + 1.0)
    shifted = special.gammaln(1.0 + w[..., None] + z) @ (0.5 * weights)
    log_mean = special.xlogy(w + 1.0, w + 1.0) - special.xlogy(w, w) - 1.0
    return shifted - log_mean


def delta_ball_gamma(body: Body, rule: QuadratureRule | None = None,
                     form: Literal["gamma", "raabe"] = "raabe", radius: float = 1.0) -> DeltaResult:
    """ln δ_C(r𝔹) = (I1 + I2 − I3 − ½ ln 2π · vol)/(2 M_C) + ln r.

    I1, I2, I3 integrate w ↦ ∫₀¹ ln Γ(w + z) dz at w = x, y and x + y over C.
    The raabe form uses its closed antiderivative w(ln w − 1) + ½ ln 2π instead.
    """
    log_r = _check_radius(radius)
    if form == "raabe":
        mean = raabe_antiderivative
    elif form == "gamma":
        def mean(w):
            return _log_gamma_mean(w, rule)
    else:
        raise DomainError(f"unknown ball-gamma form {form!r}")

    moments = geometric_moments(body, rule)
    parts = [
        integrate_body_with_residual(body, lambda x, y: mean(x), rule),
        integrate_body_with_residual(body, lambda x, y: mean(y), rule),
        integrate_body_with_residual(body, lambda x, y: mean(x + y), rule),
    ]
    i1, i2, i3 = (part.value for part in parts)
    value = (i1 + i2 - i3 - HALF_LOG_2PI * moments.vol) / (2.0 * moments.m_c)
    residual = sum(part.residual for part in parts) / (2.0 * moments.m_c)
    logger.debug(f"Gamma route ({form}) over {body.kind}: I1={i1:.12g} I2={i2:.12g} I3={i3:.12g}")
    return DeltaResult.from_log(Route.BALL_GAMMA, value + log_r, residual)
