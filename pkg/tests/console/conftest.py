from pathlib import Path
from typing import Callable

import pytest

from cleo.testers.application_tester import ApplicationTester

from ualgebra.algebra import FiniteAlgebra
from ualgebra.console.application import Application
from ualgebra.formats import dump_algebra


@pytest.fixture
def app() -> Application:
    app = Application()
    app.auto_exits(False)

    return app


@pytest.fixture
def app_tester(app: Application) -> ApplicationTester:
    return ApplicationTester(app)


@pytest.fixture
def algebra_file(tmp_path: Path) -> Callable[[FiniteAlgebra], Path]:
    def _algebra_file(alg: FiniteAlgebra) -> Path:
        path = tmp_path / f"{alg.name}.alg"
        path.write_text(dump_algebra(alg), encoding="utf-8")

        return path

    return _algebra_file
