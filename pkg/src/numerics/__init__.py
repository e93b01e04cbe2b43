"""Special functions and adaptive quadrature."""
from .quadrature import (
    QuadratureResult,
    QuadratureRule,
    gauss_legendre,
    integrate_1d,
    integrate_1d_with_residual,
    integrate_body,
    integrate_body_with_residual,
    integrate_piecewise,
    integrate_piecewise_with_residual,
)
from .special import (
    FACTORIAL_TABLE_LIMIT,
    gamma_multiplication_rhs,
    log_beta,
    log_factorial,
    log_gamma,
    raabe_antiderivative,
)

__all__ = [
    "QuadratureRule",
    "QuadratureResult",
    "gauss_legendre",
    "integrate_1d",
    "integrate_1d_with_residual",
    "integrate_body",
    "integrate_body_with_residual",
    "integrate_piecewise",
    "integrate_piecewise_with_residual",
    "FACTORIAL_TABLE_LIMIT",
    "gamma_multiplication_rhs",
    "log_beta",
    "log_factorial",
    "log_gamma",
    "raabe_antiderivative",
]
