import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from noninner.groups import Builtin, build_group  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def builtin(name: str):
    return build_group(Builtin(name))


@pytest.fixture
def group():
    return builtin


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
