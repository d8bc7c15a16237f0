import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_RESULTS: dict[int, str] = {}


class _Criterion:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit
        self.detail = ""

    def __enter__(self):
        self.start = time.perf_counter()
        _RESULTS[self.number] = f"criterion {self.number:>2}: FAIL  {self.title} (did not finish)"
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        slow = self.limit is not None and elapsed >= self.limit
        ok = exc_type is None and not slow
        note = f" [{self.detail}]" if self.detail else ""
        limit = f" < {self.limit:g}s" if self.limit is not None else ""
        why = "" if ok else (f" error: {exc}" if exc_type else " too slow")
        _RESULTS[self.number] = (f"criterion {self.number:>2}: {'PASS' if ok else 'FAIL'}  {self.title}"
                                 f"{note} ({elapsed:.2f}s{limit}){why}")
        if exc_type is None and slow:
            raise AssertionError(f"criterion {self.number} took {elapsed:.2f}s, limit {self.limit}s")
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        terminalreporter.write_line(_RESULTS[n])
