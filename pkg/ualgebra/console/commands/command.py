from pathlib import Path
from typing import TYPE_CHECKING
from typing import List
from typing import Optional

from cleo.commands.command import Command as BaseCommand
from cleo.io.outputs.output import Verbosity

from ualgebra.config import Config
from ualgebra.config import get_config
from ualgebra.console.exceptions import UsageError


if TYPE_CHECKING:
    from ualgebra.algebra import FiniteAlgebra
    from ualgebra.console.application import Application


EXIT_HOLDS = 0
EXIT_FAILS = 1


class Command(BaseCommand):
    loggers: List[str] = []

    def get_application(self) -> "Application":
        return self.application

    @property
    def config(self) -> Config:
        return get_config()

    def load_algebra(self, argument: str = "file") -> "FiniteAlgebra":
        from ualgebra.formats import load_algebra

        path = Path(self.argument(argument))
        if not path.is_file():
            raise UsageError(f"The file {path} does not exist")

        return load_algebra(path)

    def required_option(self, name: str) -> str:
        value = self.option(name)
        if value is None or value == "":
            raise UsageError(f'The "--{name}" option is required')

        return value

    def integer_option(self, name: str, default: Optional[int] = None) -> Optional[int]:
        value = self.option(name)
        if value is None:
            return default

        try:
            return int(value)
        except ValueError:
            raise UsageError(f'The "--{name}" option expects an integer, got "{value}"')

    def emit(self, text: str, path: Optional[str] = None) -> None:
        """
        Writes text verbatim to path, or to standard output for no path or "-".
        """
        if path is None or path == "-":
            self.io.write(text)

            return

        Path(path).write_text(text, encoding="utf-8")
        self.line(f"Wrote <c1>{path}</c1>", verbosity=Verbosity.VERBOSE)
