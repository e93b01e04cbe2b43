"""Monomial bases, Vandermonde determinants and Fekete estimates."""
from .ball_norms import delta_ball_qn, log_delta_ball_qn, q_n_ball, richardson_log_delta
from .basis import MonomialBasis, basis, log_vdm, monomial_matrix
from .fekete import FeketeResult, TrendRow, delta_trend, fekete_brute_force, fekete_search

__all__ = [
    "MonomialBasis",
    "basis",
    "log_vdm",
    "monomial_matrix",
    "FeketeResult",
    "TrendRow",
    "delta_trend",
    "fekete_brute_force",
    "fekete_search",
    "delta_ball_qn",
    "log_delta_ball_qn",
    "q_n_ball",
    "richardson_log_delta",
]
