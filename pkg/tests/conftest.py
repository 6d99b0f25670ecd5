import logging
import os

from pathlib import Path
from typing import Callable

import pytest

from ualgebra.algebra import FiniteAlgebra
from ualgebra.config import Config
from ualgebra.config import set_config
from ualgebra.structures import diamond_semilattice


FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def config(monkeypatch) -> Config:
    for name in list(os.environ):
        if name.startswith("UA_"):
            monkeypatch.delenv(name)

    config = Config()
    set_config(config)

    yield config

    set_config(None)


@pytest.fixture(autouse=True)
def reset_loggers() -> None:
    yield

    for name in list(logging.root.manager.loggerDict):
        if name == "ualgebra" or name.startswith("ualgebra."):
            logger = logging.getLogger(name)
            logger.handlers = []
            logger.setLevel(logging.NOTSET)


@pytest.fixture
def fixture_dir() -> Callable[[str], Path]:
    def _fixture_dir(name: str) -> Path:
        return FIXTURES / name

    return _fixture_dir


@pytest.fixture
def diamond() -> FiniteAlgebra:
    return diamond_semilattice()
