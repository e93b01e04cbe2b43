"""Evaluators for the C-transfinite diameter δ_C(K)."""
from .ball import delta_ball_beta, delta_ball_gamma, log_delta_ball_limit
from .chebyshev import delta_chebyshev
from .products import (
    c_robin_product,
    delta_product_general,
    delta_product_triangle,
    delta_rumely,
    extremal_product,
    indicator_H,
    rumely_log_delta,
)
from .results import DeltaResult, Route

__all__ = [
    "DeltaResult",
    "Route",
    "delta_ball_beta",
    "delta_ball_gamma",
    "log_delta_ball_limit",
    "delta_chebyshev",
    "c_robin_product",
    "delta_product_general",
    "delta_product_triangle",
    "delta_rumely",
    "extremal_product",
    "indicator_H",
    "rumely_log_delta",
]
