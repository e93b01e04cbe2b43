"""Set mini-language: ball[:r=], polydisk:r1=,r2=, product:<factor>x<factor>, curve:file=."""
import re
from pathlib import Path
from typing import Union

import numpy as np
from loguru import logger

from ..utils.errors import SpecParseError
from ..utils.tokens import parse_number, split_params
from .circled import Ball, CircledSet2, ModulusCurve, Polydisk
from .planar import Circle, Disk, Interval, PlanarCompact, ProductSet

_FACTOR = re.compile(r"^(disk|circle|interval)\(([^()]*)\)$")
_FACTOR_SPLIT = re.compile(r"(?<=\))x(?=[a-z])")


def parse_factor(text: str) -> PlanarCompact:
    """One planar factor: disk(R), circle(R) or interval(LO,HI)."""
    match = _FACTOR.match(text.strip())
    if not match:
        raise SpecParseError("expected disk(R), circle(R) or interval(LO,HI)", token=text)
    kind, args = match.groups()
    values = [parse_number(v) for v in args.split(",")] if args.strip() else []
    if kind == "interval":
        if len(values) != 2:
            raise SpecParseError("interval takes two endpoints", token=text)
        return Interval(lo=values[0], hi=values[1])
    if len(values) != 1:
        raise SpecParseError(f"{kind} takes one radius", token=text)
    return Disk(r=values[0]) if kind == "disk" else Circle(r=values[0])


def _load_curve(path: str) -> ModulusCurve:
    file = Path(path)
    if not file.is_file():
        raise SpecParseError(f"modulus curve file not found: {path}", token=path)
    try:
        table = np.loadtxt(file, delimiter=",", ndmin=2, comments="#")
    except ValueError as e:
        raise SpecParseError(f"cannot read modulus curve {path}: {e}", token=path) from e
    if table.shape[1] != 2:
        raise SpecParseError(f"modulus curve {path} must have two columns r1,h(r1)", token=path)
    logger.debug(f"Loaded {table.shape[0]} modulus samples from {path}")
    return ModulusCurve(rs=tuple(table[:, 0]), hs=tuple(table[:, 1]))


def parse_set(text: str) -> Union[CircledSet2, ProductSet]:
    """Build a compact set from its CLI spec string."""
    head, _, rest = text.strip().partition(":")
    try:
        if head == "ball":
            params = split_params(rest, {"r"})
            return Ball(r=parse_number(params["r"])) if "r" in params else Ball()
        if head == "polydisk":
            params = split_params(rest, {"r1", "r2"})
            if set(params) != {"r1", "r2"}:
                raise SpecParseError("polydisk needs r1= and r2=", token=text)
            return Polydisk(r1=parse_number(params["r1"]), r2=parse_number(params["r2"]))
        if head == "product":
            factors = _FACTOR_SPLIT.split(rest)
            if len(factors) != 2:
                raise SpecParseError("product needs exactly two factors joined by x", token=rest)
            return ProductSet(E=parse_factor(factors[0]), F=parse_factor(factors[1]))
        if head == "curve":
            params = split_params(rest, {"file"})
            if "file" not in params:
                raise SpecParseError("curve needs file=", token=text)
            return _load_curve(params["file"])
    except SpecParseError:
        raise
    except ValueError as e:
        raise SpecParseError(f"invalid set {text!r}: {e}", token=text) from e
    raise SpecParseError(f"unknown set kind {head!r}", token=head)
