import time
from contextlib import contextmanager

import pytest

from translinks.catalogue import enumerate_catalogue

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def catalogue_12():
    return enumerate_catalogue(12)


@pytest.fixture(scope="session")
def catalogue_10(catalogue_12):
    return [e for e in catalogue_12 if e.crossings <= 10]


@pytest.fixture
def criterion():
    """Time a block, record a PASS/FAIL line, and enforce the time limit."""

    @contextmanager
    def run(number: int, title: str, limit: float):
        t0 = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - t0
            ok = ok and elapsed < limit
            line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} ({elapsed:.2f}s / {limit:.0f}s)"
            ACCEPTANCE_LINES.append(line)
            print(line)
        assert elapsed < limit, f"criterion {number} took {elapsed:.1f}s, limit {limit}s"

    return run


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
