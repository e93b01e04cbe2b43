"""Body mini-language: simplex, triangle:a=,b=, rect:a=,b=, lp:p=[,r=], graph:file=."""
from pathlib import Path

import numpy as np
from loguru import logger

from ..utils.errors import SpecParseError
from ..utils.tokens import parse_number, split_params
from .spec import BodySpec, GraphBody, LpBall, Rectangle, Triangle, simplex


def _load_profile(path: str) -> GraphBody:
    file = Path(path)
    if not file.is_file():
        raise SpecParseError(f"profile file not found: {path}", token=path)
    try:
        table = np.loadtxt(file, delimiter=",", ndmin=2, comments="#")
    except ValueError as e:
        raise SpecParseError(f"cannot read profile table {path}: {e}", token=path) from e
    if table.shape[1] != 2:
        raise SpecParseError(f"profile table {path} must have two columns x,f(x)", token=path)
    logger.debug(f"Loaded {table.shape[0]} profile samples from {path}")
    return GraphBody(xs=tuple(table[:, 0]), fs=tuple(table[:, 1]))


def parse_body(text: str) -> BodySpec:
    """Build a body from its CLI spec string."""
    head, _, rest = text.strip().partition(":")
    try:
        if head == "simplex":
            if rest:
                raise SpecParseError("simplex takes no parameters", token=rest)
            return simplex()
        if head in {"triangle", "rect"}:
            params = split_params(rest, {"a", "b"})
            if set(params) != {"a", "b"}:
                raise SpecParseError(f"{head} needs a= and b=", token=text)
            cls = Triangle if head == "triangle" else Rectangle
            return cls(a=parse_number(params["a"]), b=parse_number(params["b"]))
        if head == "lp":
            params = split_params(rest, {"p", "r"})
            if "p" not in params:
                raise SpecParseError("lp needs p=", token=text)
            radius = parse_number(params["r"]) if "r" in params else 1.0
            return LpBall(p=parse_number(params["p"]), radius=radius)
        if head == "graph":
            params = split_params(rest, {"file"})
            if "file" not in params:
                raise SpecParseError("graph needs file=", token=text)
            return _load_profile(params["file"])
    except SpecParseError:
        raise
    except ValueError as e:
        # constraint failures arrive as pydantic ValidationError
        raise SpecParseError(f"invalid body {text!r}: {e}", token=text) from e
    raise SpecParseError(f"unknown body kind {head!r}", token=head)
