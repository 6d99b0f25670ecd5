import re

from .formatter import Formatter


class SearchLogFormatter(Formatter):
    def format(self, msg: str) -> str:
        if msg.startswith("Witness "):
            msg = re.sub(
                r"Witness (\S+) after (\d+) candidates",
                "  - Witness <c1>\\1</c1> after <b>\\2</b> candidates",
                msg,
            )
        elif msg.startswith("Searched "):
            msg = re.sub(
                r"Searched (\d+) candidates, (\d+) (witness(?:\(es\))?)",
                "Searched <b>\\1</b> candidates, <success>\\2</success> \\3",
                msg,
            )
        elif msg.startswith("Stopped "):
            msg = "<comment>{}</comment>".format(msg)
        else:
            msg = "<debug>{}</debug>".format(msg)

        return msg
