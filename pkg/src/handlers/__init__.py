"""Handlers package."""
from .convergence import convergence_router
from .delta import delta_router
from .fekete import fekete_router
from .parser import CliArgumentParser, build_parser
from .router import Command, CommandRouter
from .sweep import sweep_router
from .verify import verify_router


def root_router() -> CommandRouter:
    """All CLI verbs in help order."""
    router = CommandRouter()
    for child in (delta_router, sweep_router, fekete_router, convergence_router, verify_router):
        router.include_router(child)
    return router


__all__ = [
    "CliArgumentParser",
    "Command",
    "CommandRouter",
    "build_parser",
    "root_router",
    "convergence_router",
    "delta_router",
    "fekete_router",
    "sweep_router",
    "verify_router",
]
