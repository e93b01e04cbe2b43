"""Main module for the ctd command-line tool."""
import sys
from typing import Sequence

from loguru import logger

from src.config_data import load_config
from src.handlers import build_parser, root_router
from src.middlewares import DependencyInjectionMiddleware
from src.utils import (
    DomainError,
    NumericError,
    RouteMismatchError,
    SpecParseError,
    UnsupportedVariantError,
    setup_logging,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ROUTE = 2
EXIT_NUMERIC = 3


def main(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, wire dependencies and run one command; returns the exit code."""
    setup_logging()
    parser = build_parser(root_router())
    try:
        args = parser.parse_args(argv)
        config = load_config(quad_tol=args.quad_tol, log_level=args.log_level)
    except ValueError as e:
        # SpecParseError and settings validation both land here
        logger.error(f"Invalid arguments: {e}")
        return EXIT_USAGE

    setup_logging(config.log_level, config.log_file)
    middleware = DependencyInjectionMiddleware(config)

    try:
        return middleware(args.handler, args)
    except (SpecParseError, DomainError) as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_USAGE
    except (RouteMismatchError, UnsupportedVariantError) as e:
        logger.error(f"Route mismatch: {e}")
        return EXIT_ROUTE
    except NumericError as e:
        logger.error(f"Numeric failure: {e}")
        return EXIT_NUMERIC
    except ValueError as e:
        logger.error(f"Invalid input: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
