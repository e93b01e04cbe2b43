"""`convergence`: trend tables of finite-n estimates against the closed-form target."""
import argparse
import math

from ..bodies import parse_body
from ..compacta import Ball, parse_set
from ..config_data import Config
from ..numerics import QuadratureRule
from ..services import DeltaService
from ..utils.errors import RouteMismatchError
from ..vandermonde import basis, delta_trend, log_delta_ball_qn
from .output import write_table
from .parser import n_list, positive_int
from .router import CommandRouter

convergence_router = CommandRouter()

COLUMNS = ("n", "d_n", "l_n", "estimate", "target", "gap")


def _arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kind", choices=("qn", "fekete"), required=True)
    parser.add_argument("--body", required=True)
    parser.add_argument("--set", dest="set_spec", required=True)
    parser.add_argument("--n", dest="n_list", type=n_list, required=True, help="comma-separated, increasing")
    parser.add_argument("--resolution", type=positive_int, default=16)


@convergence_router.command("convergence", help="Q_n or Fekete estimates against the limit", arguments=_arguments)
def cmd_convergence(args: argparse.Namespace, config: Config, rule: QuadratureRule, **_) -> int:
    """Trend table of Q_n or Fekete estimates against the closed-form target."""
    body = parse_body(args.body)
    K = parse_set(args.set_spec)
    if args.kind == "qn" and not isinstance(K, Ball):
        raise RouteMismatchError(f"Q_n asymptotics need the ball, got {K.kind}")
    target = DeltaService(rule).target(body, K)

    rows = []
    if args.kind == "qn":
        for n in args.n_list:
            mb = basis(body, n)
            log_estimate = log_delta_ball_qn(body, n) + math.log(K.r)
            rows.append({"n": n, "d_n": mb.d_n, "l_n": mb.l_n, "estimate": math.exp(log_estimate),
                         "target": target.delta, "gap": abs(log_estimate - target.log_delta)})
    else:
        for row in delta_trend(K, body, args.n_list, args.resolution, config.fekete_max_sweeps):
            estimate = row.hadamard_estimate
            gap = abs(math.log(estimate) - target.log_delta) if estimate > 0 else math.inf
            rows.append({"n": row.n, "d_n": row.d_n, "l_n": row.l_n, "estimate": estimate,
                         "target": target.delta, "gap": gap})
    write_table(rows, COLUMNS, args.format, args.output)
    return 0
