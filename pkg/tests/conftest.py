import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nilgraph import builtin  # noqa: E402

_GROUPS = {}


def get_group(name):
    """Builtin groups are immutable apart from caches, so tests share one instance per name."""
    if name not in _GROUPS:
        _GROUPS[name] = builtin(name)
    return _GROUPS[name]


@pytest.fixture
def group():
    return get_group


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import LINES
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
