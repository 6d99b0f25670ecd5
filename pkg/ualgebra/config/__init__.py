from .config import Config
from .config import get_config
from .config import set_config


__all__ = ["Config", "get_config", "set_config"]
