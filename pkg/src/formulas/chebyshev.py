"""δ_C of a circled set as the geometric mean of its directional Chebyshev constants."""
from typing import Union

import numpy as np
from loguru import logger

from ..bodies import Body, geometric_moments
from ..compacta import CircledSet2, ProductSet, as_circled
from ..numerics import QuadratureRule, integrate_piecewise_with_residual
from .results import DeltaResult, Route


def _direction_knots(body: Body) -> np.ndarray:
    """Directions u = x/(x + y) of the profile breakpoints, where the reach 1/gauge may kink."""
    xs = np.asarray(body.knots, dtype=float)
    total = xs + np.asarray(body.profile(xs), dtype=float)
    us = np.where(total > 0, xs / np.where(total > 0, total, 1.0), 0.0)
    return np.unique(np.concatenate(([0.0, 1.0], np.clip(us, 0.0, 1.0))))


def delta_chebyshev(body: Body, K: Union[CircledSet2, ProductSet],
                    rule: QuadratureRule | None = None) -> DeltaResult:
    """log δ = (1/vol) ∫∫_C ln τ(K, θ) dθ / A_C, which is ∫∫_C ln τ / M_C.

    ln τ is 1-homogeneous, so with θ = t(u, 1 − u) and reach T(u) = 1/gauge(u, 1 − u)
    the area integral is ⅓ ∫₀¹ ln τ(u, 1 − u) T(u)³ du.
    """
    circled = as_circled(K)
    moments = geometric_moments(body, rule)

    def direction(us: np.ndarray) -> np.ndarray:
        reach = 1.0 / body.gauge_array(us, 1.0 - us)
        return circled.log_tau_array(us, 1.0 - us) * reach**3 / 3.0

    found = integrate_piecewise_with_residual(direction, _direction_knots(body), rule)
    logger.debug(f"Chebyshev integral over {body.kind}: {found.value:.12g} (residual {found.residual:.2e})")
    return DeltaResult.from_log(Route.CHEBYSHEV, found.value / moments.m_c, found.residual / moments.m_c)
