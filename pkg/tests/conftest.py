import time
from contextlib import contextmanager

import pytest
from hypothesis import settings

settings.register_profile("repo", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("repo")

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


@pytest.fixture
def criterion(request):
    """Time a block, record one PASS/FAIL line and enforce the time budget."""
    lines = request.config.stash[_LINES]

    @contextmanager
    def run(number: int, title: str, budget: float):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - start
            if status == "PASS" and elapsed > budget:
                status = "FAIL (over budget)"
            lines.append(f"criterion {number}: {status}  {title}  [{elapsed:.2f}s / {budget:g}s]")
        assert elapsed <= budget, f"took {elapsed:.2f}s, budget {budget}s"

    return run


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash[_LINES]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
