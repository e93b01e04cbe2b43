"""`delta`: evaluate one or all applicable routes for a body and a set."""
import argparse

from loguru import logger

from ..bodies import parse_body
from ..compacta import parse_set
from ..formulas import Route
from ..numerics import QuadratureRule
from ..services import DeltaService
from ..utils.errors import RouteMismatchError
from .output import write_table
from .router import CommandRouter

delta_router = CommandRouter()

COLUMNS = ("route", "log_delta", "delta", "residual")


def _arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--body", required=True, help="simplex | triangle:a=,b= | rect:a=,b= | lp:p=[,r=] | graph:file=")
    parser.add_argument("--set", dest="set_spec", required=True,
                        help="ball[:r=] | polydisk:r1=,r2= | product:AxB | curve:file=")
    parser.add_argument("--route", default="all", choices=["all"] + [r.value for r in Route])
    parser.add_argument("--form", default="raabe", choices=("gamma", "raabe"), help="ball-gamma integrand form")


@delta_router.command("delta", help="compute δ_C(K) by one or all routes", arguments=_arguments)
def cmd_delta(args: argparse.Namespace, rule: QuadratureRule, **_) -> int:
    """One DeltaResult row per requested route; route all appends the max-spread row."""
    body = parse_body(args.body)
    K = parse_set(args.set_spec)
    service = DeltaService(rule, form=args.form)

    if args.route != "all":
        result = service.evaluate(body, K, Route(args.route))
        write_table([result.model_dump()], COLUMNS, args.format, args.output)
        return 0

    if not service.applicable_routes(body, K):
        raise RouteMismatchError(f"no route applies to {body.kind} with {K.kind}")
    results, failures = service.evaluate_all(body, K)
    rows = [result.model_dump() for result in results]
    if len(results) > 1:
        rows.append({"route": "max-spread", "log_delta": service.spread(results)})
    write_table(rows, COLUMNS, args.format, args.output)
    if failures:
        logger.error(f"{len(failures)} route(s) failed numerically")
        raise failures[0]
    return 0
