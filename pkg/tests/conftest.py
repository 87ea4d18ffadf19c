from __future__ import annotations

from itertools import product

import pytest

_CRITERIA: list[str] = []


def ordered_instances(max_l: int, max_n: int, min_l: int = 1):
    for l in range(min_l, max_l + 1):
        yield from product(range(1, max_n + 1), repeat=l)


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion."""

    class Recorder:
        def __call__(self, label: str, check):
            try:
                detail = check()
            except BaseException:
                _CRITERIA.append(f"FAIL  {label}")
                raise
            _CRITERIA.append(f"PASS  {label}" + (f"  ({detail})" if detail else ""))

    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
