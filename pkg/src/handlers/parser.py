"""Argument parser assembled from the registered commands."""
import argparse

from ..utils.errors import SpecParseError
from ..utils.tokens import parse_number
from .router import CommandRouter


class CliArgumentParser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so bad arguments map to exit code 1."""

    def error(self, message: str):
        raise SpecParseError(message, token=" ".join(self.prog.split()[1:]) or self.prog)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise SpecParseError("expected an integer", token=text) from None
    if value < 1:
        raise SpecParseError("expected a positive integer", token=text)
    return value


def number(text: str) -> float:
    return parse_number(text)


def n_list(text: str) -> list[int]:
    """Comma-separated strictly increasing positive integers."""
    values = [positive_int(item) for item in text.split(",") if item.strip()]
    if not values:
        raise SpecParseError("empty n list", token=text)
    if any(b <= a for a, b in zip(values, values[1:])):
        raise SpecParseError("n list must increase strictly", token=text)
    return values


_GLOBAL_DEFAULTS = {"log_level": None, "quad_tol": None, "format": "csv", "output": None}


def add_global_options(parser: argparse.ArgumentParser, suppress: bool = False) -> None:
    """Options accepted both before and after the verb.

    Verb-level copies default to SUPPRESS so they never overwrite a value given before the verb.
    """
    def default(name: str):
        return argparse.SUPPRESS if suppress else _GLOBAL_DEFAULTS[name]

    parser.add_argument("--log-level", default=default("log_level"), help="loguru level for stderr diagnostics")
    parser.add_argument("--quad-tol", type=number, default=default("quad_tol"), help="quadrature relative tolerance")
    parser.add_argument("--format", choices=("csv", "json"), default=default("format"))
    parser.add_argument("--output", default=default("output"), help="output path (default stdout)")


def build_parser(router: CommandRouter) -> CliArgumentParser:
    parser = CliArgumentParser(prog="ctd", description="C-transfinite diameters of compact sets in C^2")
    add_global_options(parser)
    shared = CliArgumentParser(add_help=False)
    add_global_options(shared, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)
    for command in router.commands.values():
        child = sub.add_parser(command.name, help=command.help, parents=[shared])
        command.arguments(child)
        child.set_defaults(handler=command.handler)
    return parser
