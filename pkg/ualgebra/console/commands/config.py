import json

from typing import Any
from typing import Dict

from cleo.helpers import argument
from cleo.helpers import option

from ualgebra.console.exceptions import UsageError

from .command import EXIT_HOLDS
from .command import Command


class ConfigCommand(Command):
    name = "config"
    description = "Shows the resource limits and search settings."

    arguments = [argument("key", "Setting key.", optional=True)]
    options = [option("list", None, "List configuration settings.")]

    help = """This command shows the effective settings, environment overrides included.

Any setting can be overridden with an environment variable named after its key:

    <comment>UA_LIMITS_CONGRUENCE_SIZE=14 ua analyze big.alg</comment>

<comment>UA_MAX_SIZE</comment> overrides every size limit at once."""

    def handle(self) -> int:
        config = self.config

        if self.option("list") or not self.argument("key"):
            self._list_configuration(config.all())

            return EXIT_HOLDS

        setting_key = self.argument("key")
        value = config.get(setting_key)
        if value is None:
            raise UsageError(f"There is no {setting_key} setting.")

        if not isinstance(value, str):
            value = json.dumps(value)

        self.line(value)

        return EXIT_HOLDS

    def _list_configuration(self, config: Dict[str, Any], k: str = "") -> None:
        for key, value in sorted(config.items()):
            if isinstance(value, dict):
                self._list_configuration(value, k=f"{k}{key}.")

                continue

            self.line("<c1>{}</c1> = <c2>{}</c2>".format(k + key, json.dumps(value)))
