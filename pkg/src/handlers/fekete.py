"""`fekete`: one greedy Fekete search on the distinguished-boundary grid of K."""
import argparse

from ..bodies import parse_body
from ..compacta import parse_set, shilov_candidates
from ..config_data import Config
from ..vandermonde import fekete_search
from .output import write_table
from .parser import positive_int
from .router import CommandRouter

fekete_router = CommandRouter()

COLUMNS = ("n", "d_n", "l_n", "log_vdm", "delta_estimate", "hadamard_estimate", "sweeps", "points")


def _arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--body", required=True)
    parser.add_argument("--set", dest="set_spec", required=True)
    parser.add_argument("--n", type=positive_int, required=True)
    parser.add_argument("--resolution", type=positive_int, default=16)


@fekete_router.command("fekete", help="greedy Fekete estimate V_n^(1/l_n) for one n", arguments=_arguments)
def cmd_fekete(args: argparse.Namespace, config: Config, **_) -> int:
    """Fekete search at a single n on the candidate grid of K."""
    body = parse_body(args.body)
    K = parse_set(args.set_spec)
    candidates = shilov_candidates(K, args.resolution)
    result = fekete_search(candidates, body, args.n, config.fekete_max_sweeps)
    columns = COLUMNS if args.format == "json" else COLUMNS[:-1]
    write_table([result.model_dump()], columns, args.format, args.output)
    return 0
