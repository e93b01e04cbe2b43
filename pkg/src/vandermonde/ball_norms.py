"""Orthogonal-monomial route to δ_C of the unit ball.

On the ball the monomials are orthogonal for surface measure with
‖z^α‖² = α1!·α2!/(|α| + 1)!, so the L²-Gram determinant of Poly(nC) is a
product of factorials and gives δ_C(𝔹) in the limit without any search.
"""
import math

import numpy as np
from loguru import logger

from ..bodies import Body, geometric_moments, lattice_array
from ..numerics import log_factorial
from ..utils.errors import DomainError


def q_n_ball(body: Body, n: int) -> float:
    """Q_n = Σ over nC ∩ ℕ² of ln(a!·b!/(a+b+1)!)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    points = lattice_array(body, n)
    a, b = points[:, 0], points[:, 1]
    terms = log_factorial(a) + log_factorial(b) - log_factorial(a + b + 1)
    return float(np.sum(terms))


def log_delta_ball_qn(body: Body, n: int) -> float:
    """ln of the Q_n estimate of δ_C(𝔹): vol·q_n/(2 n d_n M_C)."""
    moments = geometric_moments(body)
    d_n = len(lattice_array(body, n))
    value = moments.vol * q_n_ball(body, n) / (2.0 * n * d_n * moments.m_c)
    logger.debug(f"Q_n estimate at n={n} (d_n={d_n}): log delta = {value:.12g}")
    return value


def delta_ball_qn(body: Body, n: int) -> float:
    """exp(vol·Q_n/(2·n·d_n·M_C)); tends to δ_C(𝔹) with an O(ln n/n) error."""
    return math.exp(log_delta_ball_qn(body, n))


def richardson_log_delta(body: Body, n: int) -> float:
    """Extrapolate the (n/2, n) pair of Q_n estimates, removing the (ln n)/n term."""
    half = n // 2
    if half < 2:
        raise DomainError(f"extrapolation needs n >= 4, got {n}")
    h1, h2 = math.log(half) / half, math.log(n) / n
    v1, v2 = log_delta_ball_qn(body, half), log_delta_ball_qn(body, n)
    return (h1 * v2 - h2 * v1) / (h1 - h2)
