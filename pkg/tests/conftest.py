import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_LINES: list = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""
    def record(num: int, title: str, ok: bool, detail: str = ""):
        line = f"criterion {num:2d} [{'PASS' if ok else 'FAIL'}] {title}" + (f": {detail}" if detail else "")
        _LINES.append((num, line))
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_LINES):
        terminalreporter.write_line(line)
