"""`sweep-p`: ln δ_{C_p}(𝔹) over a range of p, as plotted against p."""
import argparse
import math

import numpy as np
from loguru import logger

from ..formulas import delta_ball_beta
from ..numerics import QuadratureRule
from ..utils.errors import NumericError, SpecParseError
from .output import write_table
from .parser import number, positive_int
from .router import CommandRouter

sweep_router = CommandRouter()

COLUMNS = ("p", "log_delta", "delta")


def _arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--from", dest="p_from", type=number, required=True)
    parser.add_argument("--to", dest="p_to", type=number, required=True)
    parser.add_argument("--steps", type=positive_int, default=2)
    parser.add_argument("--scale", choices=("linear", "log"), default="linear")


def sweep_values(p_from: float, p_to: float, steps: int, scale: str) -> np.ndarray:
    """Exponents p from p_from to p_to, evenly spaced on a linear or log scale."""
    if not (0 < p_from <= p_to and math.isfinite(p_to)):
        raise SpecParseError("need 0 < from <= to < inf", token=f"{p_from}..{p_to}")
    if p_from == p_to:
        return np.array([p_from])
    if steps < 2:
        raise SpecParseError("a sweep needs at least two steps", token=str(steps))
    return np.geomspace(p_from, p_to, steps) if scale == "log" else np.linspace(p_from, p_to, steps)


@sweep_router.command("sweep-p", help="ln δ_{C_p}(ball) as a function of p", arguments=_arguments)
def cmd_sweep_p(args: argparse.Namespace, rule: QuadratureRule, **_) -> int:
    """Ball-beta values of ln δ for C_p along the requested p grid."""
    rows, failed = [], False
    for p in sweep_values(args.p_from, args.p_to, args.steps, args.scale):
        try:
            result = delta_ball_beta(float(p), rule)
            rows.append({"p": float(p), "log_delta": result.log_delta, "delta": result.delta})
        except NumericError as e:
            logger.error(f"Sweep row p={p:g} failed: {e}")
            rows.append({"p": float(p), "log_delta": math.nan, "delta": math.nan})
            failed = True
    write_table(rows, COLUMNS, args.format, args.output)
    return 3 if failed else 0
