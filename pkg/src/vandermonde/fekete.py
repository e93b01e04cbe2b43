"""Greedy Fekete search for approximate maximizers of |VDM| on candidate grids."""
from __future__ import annotations

import itertools
import math
from typing import Sequence, Union

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from ..bodies import Body
from ..compacta import CircledSet2, ProductSet, shilov_candidates
from ..utils.errors import DomainError
from .basis import MonomialBasis, basis, log_vdm, monomial_matrix

# Relative gain an exchange must beat to be accepted.
EXCHANGE_GAIN = 1e-12
# Pair exchanges run only while C(d, 2)·N² stays below this.
PAIR_WORK_LIMIT = 5 * 10**7
BRUTE_FORCE_LIMIT = 10**5


class FeketeResult(BaseModel):
    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    n: int
    d_n: int
    l_n: int
    log_vdm: float
    delta_estimate: float
    hadamard_estimate: float
    points: list[list[float]]
    indices: list[int]
    sweeps: int = 0

    @classmethod
    def from_selection(cls, candidates: np.ndarray, picks: Sequence[int], mb: MonomialBasis,
                       sweeps: int = 0) -> "FeketeResult":
        chosen = candidates[list(picks)]
        value = log_vdm(chosen, mb)
        hadamard = 0.5 * mb.d_n * math.log(mb.d_n)
        finite = math.isfinite(value)
        return cls(
            n=mb.n,
            d_n=mb.d_n,
            l_n=mb.l_n,
            log_vdm=value,
            delta_estimate=math.exp(value / mb.l_n) if finite else 0.0,
            hadamard_estimate=math.exp((value - hadamard) / mb.l_n) if finite else 0.0,
            points=[[p.real, p.imag, q.real, q.imag] for p, q in chosen],
            indices=[int(k) for k in picks],
            sweeps=sweeps,
        )


class TrendRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    d_n: int
    l_n: int
    delta_estimate: float
    hadamard_estimate: float


def _greedy(E: np.ndarray) -> tuple[list[int], bool]:
    """Leja growth via Schur complements; returns (picks, nonsingular)."""
    d, count = E.shape
    picks: list[int] = []
    for k in range(d):
        if k == 0:
            scores = np.abs(E[0])
        else:
            A = E[:k, picks]
            w = np.linalg.solve(A.T, E[k, picks])
            scores = np.abs(E[k] - w @ E[:k])
        scores[picks] = -1.0
        best = int(np.argmax(scores))
        scale = float(np.max(np.abs(E[k])))
        if scores[best] <= 1e-14 * max(scale, 1e-300):
            rest = [c for c in range(count) if c not in picks]
            return picks + rest[: d - k], False
        picks.append(best)
    return picks, True


def _single_pass(E: np.ndarray, picks: list[int]) -> bool:
    changed = False
    for slot in range(len(picks)):
        G = np.linalg.solve(E[:, picks], E)
        gains = np.abs(G[slot])
        best = int(np.argmax(gains))
        if gains[best] > 1.0 + EXCHANGE_GAIN:
            picks[slot] = best
            changed = True
    return changed


def _pair_pass(E: np.ndarray, picks: list[int]) -> bool:
    d = len(picks)
    G = np.linalg.solve(E[:, picks], E)
    best_gain, best_move = 1.0 + EXCHANGE_GAIN, None
    for i, j in itertools.combinations(range(d), 2):
        # replacing slots i, j by columns c, c' scales det by this 2x2 minor
        minor = np.abs(np.outer(G[i], G[j]) - np.outer(G[j], G[i]))
        flat = int(np.argmax(minor))
        if minor.flat[flat] > best_gain:
            best_gain = float(minor.flat[flat])
            best_move = (i, j, *np.unravel_index(flat, minor.shape))
    if best_move is None:
        return False
    i, j, c, c2 = best_move
    picks[i], picks[j] = int(c), int(c2)
    return True


def fekete_search(candidates: np.ndarray, body: Body, n: int, max_sweeps: int = 20) -> FeketeResult:
    """Greedy Leja selection followed by exchange sweeps over the candidate grid."""
    candidates = np.asarray(candidates, dtype=complex).reshape(-1, 2)
    mb = basis(body, n)
    if len(candidates) < mb.d_n:
        raise DomainError(f"{len(candidates)} candidates cannot hold d_n={mb.d_n} points")
    E = monomial_matrix(candidates, mb.exponents)
    picks, regular = _greedy(E)
    sweeps = 0
    if regular:
        pair_allowed = math.comb(mb.d_n, 2) * len(candidates) ** 2 <= PAIR_WORK_LIMIT
        while sweeps < max_sweeps:
            sweeps += 1
            if _single_pass(E, picks):
                continue
            if not (pair_allowed and _pair_pass(E, picks)):
                break
    result = FeketeResult.from_selection(candidates, picks, mb, sweeps)
    logger.debug(f"Fekete search n={n} d_n={mb.d_n}: log_vdm={result.log_vdm:.6g} after {sweeps} sweeps")
    return result


def fekete_brute_force(candidates: np.ndarray, body: Body, n: int) -> FeketeResult:
    """Exact maximum of |VDM| over all d_n-subsets of a small candidate set."""
    candidates = np.asarray(candidates, dtype=complex).reshape(-1, 2)
    mb = basis(body, n)
    total = math.comb(len(candidates), mb.d_n)
    if total == 0:
        raise DomainError(f"{len(candidates)} candidates cannot hold d_n={mb.d_n} points")
    if total > BRUTE_FORCE_LIMIT:
        raise DomainError(f"{total} subsets exceed the brute-force limit {BRUTE_FORCE_LIMIT}")
    E = monomial_matrix(candidates, mb.exponents)
    best_value, best_subset = -math.inf, None
    subsets = itertools.combinations(range(len(candidates)), mb.d_n)
    while chunk := list(itertools.islice(subsets, 10_000)):
        idx = np.array(chunk)
        sign, logabs = np.linalg.slogdet(np.moveaxis(E[:, idx], 1, 0))
        logabs = np.where(sign != 0, logabs, -np.inf)
        k = int(np.argmax(logabs))
        if logabs[k] > best_value:
            best_value, best_subset = float(logabs[k]), chunk[k]
    return FeketeResult.from_selection(candidates, best_subset or tuple(range(mb.d_n)), mb)


def delta_trend(K: Union[CircledSet2, ProductSet], body: Body, n_list: Sequence[int],
                resolution: int, max_sweeps: int = 20) -> list[TrendRow]:
    """Fekete estimates for each n on the distinguished-boundary grid of K."""
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise DomainError(f"n list must increase strictly, got {list(n_list)}")
    candidates = shilov_candidates(K, resolution)
    rows = []
    for n in n_list:
        found = fekete_search(candidates, body, n, max_sweeps)
        rows.append(TrendRow(n=n, d_n=found.d_n, l_n=found.l_n,
                             delta_estimate=found.delta_estimate,
                             hadamard_estimate=found.hadamard_estimate))
    return rows
