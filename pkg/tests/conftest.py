import contextlib
import time
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def criterion():
    """Record one acceptance criterion as a PASS/FAIL line with its runtime."""

    @contextlib.contextmanager
    def record(number, label, limit_s):
        start = time.perf_counter()
        detail = {}
        try:
            yield detail
        except BaseException:
            ACCEPTANCE_LINES.append(f"FAIL  criterion {number:>2}: {label} {_fmt(detail)}")
            raise
        elapsed = time.perf_counter() - start
        ok = elapsed < limit_s
        ACCEPTANCE_LINES.append(
            f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {label} {_fmt(detail)}"
            f"[{elapsed:.2f}s < {limit_s}s]")
        assert ok, f"criterion {number} took {elapsed:.1f}s (limit {limit_s}s)"

    return record


def _fmt(detail):
    return "".join(f"{key}={val} " for key, val in detail.items())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
