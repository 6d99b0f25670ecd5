import logging
import os

from copy import deepcopy
from typing import Any
from typing import Callable
from typing import Dict
from typing import Optional

from ualgebra.exceptions import ResourceLimitExceeded


logger = logging.getLogger(__name__)

_NOT_SET = object()

MAX_SIZE_ENV = "UA_MAX_SIZE"


def boolean_normalizer(val: str) -> bool:
    return val in ["true", "1"]


def integer_normalizer(val: str) -> int:
    return int(val.replace("_", ""))


class Config:
    default_config = {
        "limits": {
            "congruence-size": 12,
            "subuniverse-size": 16,
            "polynomial-size": 7,
            "identity-assignments": 10_000_000,
            "directoid-size": 4,
            "groupoid-size": 3,
            "enumeration": 1_000_000,
            "subset-search-blocks": 12,
        },
        "search": {"parallel": True, "max-workers": 4},
    }

    def __init__(self, use_environment: bool = True) -> None:
        self._config = deepcopy(self.default_config)
        self._use_environment = use_environment

    @property
    def config(self) -> Dict:
        return self._config

    def merge(self, config: Dict[str, Any]) -> None:
        from ualgebra.utils.helpers import merge_dicts

        merge_dicts(self._config, config)

    def all(self) -> Dict[str, Any]:
        def _all(config: Dict, parent_key: str = "") -> Dict:
            all_ = {}

            for key in config:
                value = self.get(parent_key + key)
                if isinstance(value, dict):
                    all_[key] = _all(config[key], parent_key=parent_key + key + ".")
                    continue

                all_[key] = value

            return all_

        return _all(self.config)

    def get(self, setting_name: str, default: Any = None) -> Any:
        """
        Retrieve a setting value.
        """
        keys = setting_name.split(".")

        # Looking in the environment if the setting
        # is set via a UA_* environment variable
        if self._use_environment:
            env = "UA_{}".format("_".join(k.upper().replace("-", "_") for k in keys))
            value = os.getenv(env, _NOT_SET)
            if value is not _NOT_SET:
                return self._get_normalizer(setting_name)(value)

            if self._is_size_limit(setting_name):
                value = os.getenv(MAX_SIZE_ENV, _NOT_SET)
                if value is not _NOT_SET:
                    return integer_normalizer(value)

        value = self._config
        for key in keys:
            if key not in value:
                return default

            value = value[key]

        return value

    def limit(self, name: str) -> int:
        return int(self.get(f"limits.{name}"))

    def check_limit(self, name: str, requested: int, what: str = "") -> None:
        allowed = self.limit(name)
        if requested > allowed:
            logger.debug(f"Limit {name} exceeded: {requested} > {allowed}")

            raise ResourceLimitExceeded(f"limits.{name}", requested, allowed, what)

    def _is_size_limit(self, name: str) -> bool:
        return name.startswith("limits.") and name.endswith("-size")

    def _get_normalizer(self, name: str) -> Callable:
        if name in {"search.parallel"}:
            return boolean_normalizer

        if name.startswith("limits.") or name == "search.max-workers":
            return integer_normalizer

        return lambda val: val


_config: Optional[Config] = None


def get_config() -> Config:
    global _config

    if _config is None:
        _config = Config()

    return _config


def set_config(config: Optional[Config]) -> None:
    global _config

    _config = config
