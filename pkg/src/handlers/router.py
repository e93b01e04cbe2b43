"""Command router: handlers register their CLI verb and its arguments."""
import argparse
from dataclasses import dataclass, field
from typing import Callable

Handler = Callable[..., int]
ArgumentSetup = Callable[[argparse.ArgumentParser], None]


@dataclass(frozen=True)
class Command:
    name: str
    help: str
    handler: Handler
    arguments: ArgumentSetup


@dataclass
class CommandRouter:
    """Collects commands from handler modules; routers can be nested."""
    commands: dict[str, Command] = field(default_factory=dict)

    def command(self, name: str, help: str, arguments: ArgumentSetup) -> Callable[[Handler], Handler]:
        def register(handler: Handler) -> Handler:
            if name in self.commands:
                raise ValueError(f"command {name!r} registered twice")
            self.commands[name] = Command(name=name, help=help, handler=handler, arguments=arguments)
            return handler
        return register

    def include_router(self, other: "CommandRouter") -> None:
        """Merge the commands of another router into this one."""
        for command in other.commands.values():
            if command.name in self.commands:
                raise ValueError(f"command {command.name!r} registered twice")
            self.commands[command.name] = command
