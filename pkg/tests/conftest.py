import pytest

_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion and assert on it."""

    def record(number: int, title: str, ok: bool, elapsed: float | None = None, limit: float | None = None, note: str = ""):
        in_time = limit is None or elapsed is None or elapsed < limit
        passed = ok and in_time
        timing = f" ({elapsed:.1f}s < {limit:g}s)" if limit is not None and elapsed is not None else ""
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {title}{timing}{'  ' + note if note else ''}"
        _LINES.append(line)
        print(line)
        assert ok, line
        assert in_time, f"{line}: over the time limit"

    return record


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
