"""Exception hierarchy shared by all modules."""


class CtdError(Exception):
    """Base class for every error raised by the library."""


class DomainError(CtdError, ValueError):
    """Input outside the domain of an operation."""


class UnsupportedVariantError(CtdError, TypeError):
    """Operation is not defined for this variant of a body or set."""


class NumericError(CtdError, ArithmeticError):
    """Numerical procedure did not reach its tolerance."""

    def __init__(self, message: str, residual: float = float("nan")):
        super().__init__(f"{message} (residual={residual:.3e})")
        self.residual = residual


class SpecParseError(CtdError, ValueError):
    """Body/set mini-language or argument could not be parsed."""

    def __init__(self, message: str, token: str):
        super().__init__(f"{message}: {token!r}")
        self.token = token


class RouteMismatchError(CtdError):
    """Requested route does not apply to the given body and set."""
