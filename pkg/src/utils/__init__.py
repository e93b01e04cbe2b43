"""Utils package."""
from .errors import (
    CtdError,
    DomainError,
    NumericError,
    RouteMismatchError,
    SpecParseError,
    UnsupportedVariantError,
)
from .logging_config import setup_logging

__all__ = [
    "setup_logging",
    "CtdError",
    "DomainError",
    "NumericError",
    "RouteMismatchError",
    "SpecParseError",
    "UnsupportedVariantError",
]
