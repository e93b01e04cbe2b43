"""Shared tokenizing helpers for the body and set mini-languages."""
import math
from fractions import Fraction

from .errors import SpecParseError


def parse_number(token: str) -> float:
    """Float, `inf` or a rational literal like `1/2`."""
    text = token.strip()
    if text.lower() in {"inf", "infinity", "+inf"}:
        return math.inf
    try:
        if "/" in text:
            return float(Fraction(text))
        return float(text)
    except (ValueError, ZeroDivisionError):
        raise SpecParseError(f"not a number: {text!r}", token=text) from None


def split_params(text: str, allowed: set[str]) -> dict[str, str]:
    """Parse `k=v,k=v` into a dict, rejecting unknown or repeated keys."""
    params: dict[str, str] = {}
    if not text:
        return params
    for item in text.split(","):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not value.strip():
            raise SpecParseError(f"expected key=value, got {item!r}", token=item)
        if key not in allowed:
            raise SpecParseError(f"unknown parameter {key!r}", token=key)
        if key in params:
            raise SpecParseError(f"parameter {key!r} given twice", token=key)
        params[key] = value.strip()
    return params
