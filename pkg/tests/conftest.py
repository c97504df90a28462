import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def criterion_log():
    """Record one ``[PASS]/[FAIL]`` line per acceptance criterion."""

    def record(number, title, passed, detail):
        tag = "PASS" if passed else "FAIL"
        _ACCEPTANCE_LINES.append((number, f"[{tag}] criterion {number}: {title} -- {detail}"))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
