import time

import pytest

from m13.search import BASIC, SIGNED, bfs

BUILD_SECONDS = {}
ACCEPTANCE = []          # (criterion, title, passed, detail), filled by test_acceptance


def _timed_bfs(kind):
    t = time.perf_counter()
    db = bfs(kind)
    BUILD_SECONDS[kind] = time.perf_counter() - t
    return db


@pytest.fixture(scope="session")
def basic_db():
    return _timed_bfs(BASIC)


@pytest.fixture(scope="session")
def signed_db():
    return _timed_bfs(SIGNED)


@pytest.fixture(scope="session")
def oracle(basic_db):
    from m13.transitivity import SextupleOracle
    return SextupleOracle(basic_db)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, title, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {n:>2}. {title}: {detail}")
