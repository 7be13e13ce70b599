import contextlib

import pytest

_CRITERIA = []


@pytest.fixture
def criterion():
    """Context manager that records a PASS/FAIL line for an acceptance criterion."""

    @contextlib.contextmanager
    def record(number, label):
        try:
            yield
        except BaseException:
            line = f"FAIL  criterion {number:>2}: {label}"
            _CRITERIA.append(line)
            print(line)
            raise
        line = f"PASS  criterion {number:>2}: {label}"
        _CRITERIA.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_CRITERIA, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
