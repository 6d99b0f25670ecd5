import re

from .formatter import Formatter


class ReportLogFormatter(Formatter):
    def format(self, msg: str) -> str:
        if msg.startswith("Skipping "):
            return re.sub(
                r"Skipping ([^:]+): (.+)",
                "<warning>Skipping <b>\\1</b></warning>: \\2",
                msg,
                flags=re.DOTALL,
            )

        return msg
