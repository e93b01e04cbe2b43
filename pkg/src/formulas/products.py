"""Closed forms for product sets K = E × F."""
import math
from typing import Sequence

import numpy as np

from ..bodies import Body, geometric_moments
from ..compacta import PlanarCompact, green, robin_constant
from ..utils.errors import DomainError
from .results import DeltaResult, Route


def _require_positive(**values: float) -> None:
    for name, value in values.items():
        if not value > 0:
            raise DomainError(f"{name} must be positive, got {value}")


def delta_product_triangle(a: float, b: float, DE: float, DF: float) -> DeltaResult:
    """δ_{T_{a,b}}(E × F) = D(E)^{b/(a+b)} · D(F)^{a/(a+b)}."""
    _require_positive(a=a, b=b, DE=DE, DF=DF)
    return DeltaResult.from_log(Route.PRODUCT_TRIANGLE, (b * math.log(DE) + a * math.log(DF)) / (a + b))


def delta_product_general(body: Body, DE: float, DF: float) -> DeltaResult:
    """Weights the factor diameters by the face integrals A = ∫x f and B = ∫y g."""
    _require_positive(DE=DE, DF=DF)
    moments = geometric_moments(body)
    A, B = moments.face_a, moments.face_b
    return DeltaResult.from_log(Route.PRODUCT_GENERAL, (A * math.log(DE) + B * math.log(DF)) / (A + B))


def rumely_log_delta(a: float, b: float, rhoE: float, rhoF: float) -> float:
    """−(ab)²(ρ_E/a + ρ_F/b) / (3!·M_{T_{a,b}}), with 3!·M = ab(a+b)."""
    _require_positive(a=a, b=b)
    # the ab factors cancel against 3!·M
    return -(b * rhoE + a * rhoF) / (a + b)


def delta_rumely(a: float, b: float, E: PlanarCompact, F: PlanarCompact) -> DeltaResult:
    """Robin-constant route for T_{a,b} and E × F."""
    return DeltaResult.from_log(Route.RUMELY, rumely_log_delta(a, b, robin_constant(E), robin_constant(F)))


def extremal_product(a: float, b: float, E: PlanarCompact, F: PlanarCompact, z: Sequence[complex]) -> float:
    """V_{C,K}(z) = max(b·g_E(z1), a·g_F(z2)) for C = T_{a,b}."""
    z1, z2 = z
    return max(b * green(E, z1), a * green(F, z2))


def c_robin_product(a: float, b: float, E: PlanarCompact, F: PlanarCompact, z: Sequence[complex]) -> float:
    """max(b(ρ_E + ln|z1|), a(ρ_F + ln|z2|)); −inf at the origin."""
    z1, z2 = z
    with np.errstate(divide="ignore"):
        first = b * (robin_constant(E) + float(np.log(abs(z1))))
        second = a * (robin_constant(F) + float(np.log(abs(z2))))
    return max(first, second)


def indicator_H(a: float, b: float, z: Sequence[complex]) -> float:
    """H_C(z) = max(b·log⁺|z1|, a·log⁺|z2|) for C = T_{a,b}."""
    z1, z2 = z
    with np.errstate(divide="ignore"):
        return max(b * max(float(np.log(abs(z1))), 0.0), a * max(float(np.log(abs(z2))), 0.0))
