import pytest

_CRITERION_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one pass/fail summary line for an acceptance criterion."""

    def record(line: str) -> None:
        _CRITERION_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERION_LINES:
            terminalreporter.write_line(line)
