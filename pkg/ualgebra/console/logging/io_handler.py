import logging

from typing import TYPE_CHECKING


if TYPE_CHECKING:
    from logging import LogRecord

    from cleo.io.io import IO  # noqa


class IOHandler(logging.Handler):
    """
    Writes log records to the error output of the running command; standard
    output carries only the command's result.
    """

    def __init__(self, io: "IO") -> None:
        self._io = io

        super().__init__()

    def emit(self, record: "LogRecord") -> None:
        try:
            msg = self.format(record)
            self._io.write_error_line(msg)
        except Exception:
            self.handleError(record)
