"""Shared pytest plumbing: collects acceptance evidence lines and prints
them as a summary section, one line per criterion, after the run."""

import pytest

_acceptance_lines = []


@pytest.fixture
def acceptance_log():
    def record(line: str) -> None:
        _acceptance_lines.append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in _acceptance_lines:
        terminalreporter.write_line(line)
