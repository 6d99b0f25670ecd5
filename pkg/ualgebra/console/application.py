import logging

from typing import TYPE_CHECKING
from typing import Any
from typing import List
from typing import Optional

from cleo.application import Application as BaseApplication
from cleo.events.console_command_event import ConsoleCommandEvent
from cleo.events.console_events import COMMAND
from cleo.events.event_dispatcher import EventDispatcher
from cleo.exceptions import CleoException
from cleo.io.inputs.argv_input import ArgvInput
from cleo.io.inputs.input import Input
from cleo.io.io import IO
from cleo.io.outputs.output import Output

from ualgebra.__version__ import __version__
from ualgebra.console import set_styles
from ualgebra.exceptions import AlgebraError
from ualgebra.exceptions import ResourceLimitExceeded

from .command_loader import CommandLoader
from .commands.command import Command
from .exceptions import UsageError


if TYPE_CHECKING:
    from crashtest.solution_providers.solution_provider_repository import (
        SolutionProviderRepository,
    )


EXIT_USAGE = 2
EXIT_RESOURCE_LIMIT = 3

COMMANDS = [
    "analyze",
    "check-identity",
    "check-terms",
    "config",
    "conlat",
    "quotient",
    "search",
    "validate",
]


class Application(BaseApplication):
    def __init__(self) -> None:
        super().__init__("ua", __version__)

        dispatcher = EventDispatcher()
        dispatcher.add_listener(COMMAND, self.register_command_loggers)
        self.set_event_dispatcher(dispatcher)

        self.set_command_loader(CommandLoader(COMMANDS))

    @property
    def command_loader(self) -> CommandLoader:
        return self._command_loader

    def create_io(
        self,
        input: Optional[Input] = None,
        output: Optional[Output] = None,
        error_output: Optional[Output] = None,
    ) -> IO:
        io = super().create_io(input, output, error_output)
        set_styles(io)

        return io

    def render_error(self, error: Exception, io: IO) -> None:
        # We set the solution provider repository here to load providers
        # only when an error occurs
        self.set_solution_provider_repository(self._get_solution_provider_repository())

        super().render_error(error, io)

    def _run(self, io: IO) -> int:
        try:
            return super()._run(io)
        except ResourceLimitExceeded as e:
            self.render_error(e, io)

            return EXIT_RESOURCE_LIMIT
        except AlgebraError as e:
            # Parse and domain errors are the user's input, not a crash
            self.render_error(UsageError(str(e)), io)

            return EXIT_USAGE
        except CleoException as e:
            self.render_error(e, io)

            return EXIT_USAGE

    def register_command_loggers(
        self, event: ConsoleCommandEvent, event_name: str, _: Any
    ) -> None:
        from .logging.io_formatter import IOFormatter
        from .logging.io_handler import IOHandler

        command = event.command
        if not isinstance(command, Command):
            return

        io = event.io

        handler = IOHandler(io)
        handler.setFormatter(IOFormatter())
        logging.getLogger("ualgebra").handlers = [handler]

        # Every logger of the package reaches the handler above
        for name in ["ualgebra"] + command.loggers:
            logger = logging.getLogger(name)

            level = logging.WARNING
            # Loggers a command declares report progress and
            # start at the INFO level.
            if name in command.loggers:
                level = logging.INFO

            if io.is_debug():
                level = logging.DEBUG
            elif io.is_very_verbose() or io.is_verbose():
                level = logging.INFO

            logger.setLevel(level)

    def _get_solution_provider_repository(self) -> "SolutionProviderRepository":
        from crashtest.solution_providers.solution_provider_repository import (
            SolutionProviderRepository,
        )

        from ualgebra.console.solutions.providers import ResourceLimitSolutionProvider

        repository = SolutionProviderRepository()
        repository.register_solution_providers([ResourceLimitSolutionProvider])

        return repository


def main(argv: Optional[List[str]] = None) -> int:
    """
    Runs the application on argv, program name first, or on sys.argv.
    """
    return Application().run(ArgvInput(argv) if argv is not None else None)


if __name__ == "__main__":
    main()
