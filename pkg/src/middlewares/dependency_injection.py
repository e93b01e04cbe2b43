"""Handler middlewares."""
import argparse
from typing import Any, Callable, Dict

from loguru import logger

from ..config_data import Config


class DependencyInjectionMiddleware:
    """Middleware to inject configuration and the quadrature rule into handlers."""

    def __init__(self, config: Config):
        self.config = config
        self.rule = config.get_quadrature_rule()

    def __call__(self, handler: Callable[..., int], args: argparse.Namespace, data: Dict[str, Any] | None = None) -> int:
        data = dict(data or {})
        data['config'] = self.config
        data['rule'] = self.rule
        logger.debug(f"Dispatching {args.command} with rule {self.rule!r}")
        return handler(args, **data)
