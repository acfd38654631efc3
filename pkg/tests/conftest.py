import contextlib
import time

import pytest

RESULTS = {}


@contextlib.contextmanager
def _criterion(number, title, limit=None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        RESULTS[number] = (ok, title, elapsed, limit)


@pytest.fixture
def criterion():
    return _criterion


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, title, elapsed, limit = RESULTS[n]
        budget = f" / {limit:g}s" if limit else ""
        terminalreporter.write_line(
            f"[{'PASS' if ok else 'FAIL'}] {n:2d}. {title} ({elapsed:.2f}s{budget})")
