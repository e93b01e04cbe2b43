"""Log-gamma family on the positive reals."""
import math
from functools import lru_cache
from typing import Union

import numpy as np
from scipy import special

from ..utils.errors import DomainError

ArrayLike = Union[float, np.ndarray]

# Largest argument served from the precomputed log-factorial table.
FACTORIAL_TABLE_LIMIT = 10**6


def _check_positive(name: str, value: ArrayLike) -> None:
    if np.any(np.asarray(value) <= 0):
        raise DomainError(f"{name} requires positive arguments, got {value!r}")


def log_gamma(x: ArrayLike) -> ArrayLike:
    """ln Γ(x) for x > 0 (scalar or array)."""
    _check_positive("log_gamma", x)
    value = special.gammaln(x)
    return float(value) if np.ndim(value) == 0 else value


@lru_cache(maxsize=1)
def _log_factorial_table() -> np.ndarray:
    table = special.gammaln(np.arange(FACTORIAL_TABLE_LIMIT + 1, dtype=float) + 1.0)
    table.setflags(write=False)
    return table


def log_factorial(n: Union[int, np.ndarray]) -> ArrayLike:
    """ln(n!) for nonnegative integers, table-backed up to FACTORIAL_TABLE_LIMIT."""
    arr = np.asarray(n)
    if np.any(arr < 0):
        raise DomainError(f"log_factorial requires nonnegative integers, got {n!r}")
    if arr.size and arr.max() <= FACTORIAL_TABLE_LIMIT:
        value = _log_factorial_table()[arr.astype(np.int64)]
    else:
        value = special.gammaln(arr.astype(float) + 1.0)
    return float(value) if np.ndim(value) == 0 else value


def log_beta(x: ArrayLike, y: ArrayLike) -> ArrayLike:
    """ln B(x, y) = ln Γ(x) + ln Γ(y) − ln Γ(x + y)."""
    _check_positive("log_beta", x)
    _check_positive("log_beta", y)
    value = special.betaln(x, y)
    return float(value) if np.ndim(value) == 0 else value


def gamma_multiplication_rhs(z: float, n: int) -> float:
    """Right side of Γ(nz) = (2π)^{(1−n)/2} n^{nz−1/2} ∏_k Γ(z + k/n), in log form."""
    if n < 1:
        raise DomainError(f"multiplication order must be >= 1, got {n}")
    _check_positive("gamma_multiplication_rhs", z)
    shifts = z + np.arange(n) / n
    return (
        0.5 * (1 - n) * math.log(2.0 * math.pi)
        + (n * z - 0.5) * math.log(n)
        + float(np.sum(special.gammaln(shifts)))
    )


def raabe_antiderivative(x: ArrayLike) -> ArrayLike:
    """∫₀¹ ln Γ(x + z) dz = x(ln x − 1) + ½ ln 2π, with 0·ln 0 = 0."""
    x = np.asarray(x, dtype=float)
    value = special.xlogy(x, x) - x + 0.5 * math.log(2.0 * math.pi)
    return float(value) if np.ndim(value) == 0 else value
