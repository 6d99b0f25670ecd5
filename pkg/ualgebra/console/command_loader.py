from importlib import import_module
from typing import TYPE_CHECKING
from typing import Callable
from typing import Iterable

from cleo.exceptions import LogicException
from cleo.loaders.factory_command_loader import FactoryCommandLoader


if TYPE_CHECKING:
    from .commands.command import Command


def command_module(name: str) -> str:
    return "ualgebra.console.commands.{}".format(name.replace("-", "_"))


def command_class_name(name: str) -> str:
    return "{}Command".format("".join(part.title() for part in name.split("-")))


def load_command(name: str) -> Callable[[], "Command"]:
    def _load() -> "Command":
        module = import_module(command_module(name))
        command_class = getattr(module, command_class_name(name))

        return command_class()

    return _load


class CommandLoader(FactoryCommandLoader):
    """
    Imports each command module only when its command is requested.
    """

    def __init__(self, names: Iterable[str] = ()) -> None:
        super().__init__({})

        for name in names:
            self.register_factory(name, load_command(name))

    def register_factory(self, command_name: str, factory: Callable) -> None:
        if command_name in self._factories:
            raise LogicException(f'The command "{command_name}" already exists.')

        self._factories[command_name] = factory
