"""Shared fixtures: a pristine config per test and a CLI runner."""
import copy
import io

import pytest

from qtau import QTau
from qtau.config import DEFAULT_CONFIG, config


@pytest.fixture(autouse=True)
def fresh_config():
    config.clear()
    config.update(copy.deepcopy(DEFAULT_CONFIG))
    yield config
    config.clear()
    config.update(copy.deepcopy(DEFAULT_CONFIG))


class CliResult:
    def __init__(self, code: int, out: str, err: str):
        self.code = code
        self.out = out
        self.err = err


@pytest.fixture
def cli(fresh_config):
    """Runs a qtau command line in-process and captures its streams."""
    app = QTau(fresh_config)

    def run(*argv) -> CliResult:
        out, err = io.StringIO(), io.StringIO()
        code = app.run(argv, stdout=out, stderr=err)
        return CliResult(code, out.getvalue(), err.getvalue())

    return run
