"""Shared pytest wiring.

The acceptance tests record one status line per criterion; echoing them from
the terminal summary keeps them visible even though pytest captures stdout of
passing tests.
"""

CRITERION_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)
