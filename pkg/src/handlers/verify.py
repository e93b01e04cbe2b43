"""`verify`: run the built-in acceptance suite."""
import argparse

from loguru import logger

from ..config_data import Config
from ..numerics import QuadratureRule
from ..services import GROUPS, VerificationSuite
from .output import write_table
from .parser import number
from .router import CommandRouter

verify_router = CommandRouter()

COLUMNS = ("criterion", "group", "check", "measured", "target", "tolerance", "passed", "seconds")


def _arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--only", choices=GROUPS, default=None)
    parser.add_argument("--tol-scale", type=number, default=1.0)


@verify_router.command("verify", help="run the acceptance criteria", arguments=_arguments)
def cmd_verify(args: argparse.Namespace, config: Config, rule: QuadratureRule, **_) -> int:
    """Run the acceptance checks; any failure exits with 3."""
    suite = VerificationSuite(rule, tol_scale=args.tol_scale, max_sweeps=config.fekete_max_sweeps)
    outcomes = suite.run(args.only)
    write_table([o.model_dump() for o in outcomes], COLUMNS, args.format, args.output)
    failed = [o for o in outcomes if not o.passed]
    for outcome in failed:
        logger.warning(f"FAIL {outcome.criterion}: {outcome.check} measured={outcome.measured:.12g} "
                       f"target={outcome.target:.12g} tol={outcome.tolerance:.3g}")
    logger.info(f"{len(outcomes) - len(failed)}/{len(outcomes)} checks passed")
    return 0 if not failed else 3
