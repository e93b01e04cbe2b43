"""Monomial bases of Poly(nC) and log-Vandermonde determinants."""
from __future__ import annotations

from typing import Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PositiveInt, PrivateAttr

from ..bodies import Body, MultiIndex2, degrees_array, lattice_array
from ..utils.errors import DomainError


class MonomialBasis(BaseModel):
    """grlex-ordered exponents of nC ∩ ℕ².

    `l_n` sums the total degrees |α|, which is the normalization whose ratio
    l_n/(n·d_n) tends to A_C; `l_n_c` sums the C-degrees instead.
    """
    model_config = ConfigDict(frozen=True)

    body: Body = Field(discriminator="kind")
    n: PositiveInt
    d_n: int
    l_n: int
    l_n_c: int

    _exponents: np.ndarray = PrivateAttr()

    @property
    def exponents(self) -> np.ndarray:
        return self._exponents

    @property
    def indices(self) -> list[MultiIndex2]:
        return [MultiIndex2(j1=int(a), j2=int(b)) for a, b in self._exponents]


def basis(body: Body, n: int) -> MonomialBasis:
    """Monomials z^α with α ∈ nC ∩ ℕ², grlex ordered."""
    if n < 1:
        raise DomainError(f"basis degree n must be >= 1, got {n}")
    exponents = lattice_array(body, n)
    result = MonomialBasis(
        body=body,
        n=n,
        d_n=len(exponents),
        l_n=int(exponents.sum()),
        l_n_c=int(degrees_array(body, exponents).sum()),
    )
    exponents.setflags(write=False)
    result._exponents = exponents
    return result


def monomial_matrix(points: np.ndarray, exponents: np.ndarray) -> np.ndarray:
    """E[i, c] = z1^{α_i,1} z2^{α_i,2} evaluated at point c."""
    points = np.asarray(points, dtype=complex).reshape(-1, 2)
    exponents = np.asarray(exponents)
    z1 = points[None, :, 0] ** exponents[:, 0, None]
    z2 = points[None, :, 1] ** exponents[:, 1, None]
    return z1 * z2


def log_vdm(points: np.ndarray, basis: Union[MonomialBasis, np.ndarray]) -> float:
    """ln|det[e_i(ζ_j)]|, −inf for singular configurations."""
    exponents = basis.exponents if isinstance(basis, MonomialBasis) else np.asarray(basis)
    points = np.asarray(points, dtype=complex).reshape(-1, 2)
    if len(points) != len(exponents):
        raise DomainError(f"{len(points)} points for a basis of size {len(exponents)}")
    sign, logabs = np.linalg.slogdet(monomial_matrix(points, exponents))
    return float(logabs) if sign != 0 else float("-inf")
