"""Shared pytest hooks.

The acceptance tests record one verdict line per criterion; printing them
from inside a test would be swallowed by capture, so they are replayed in
the terminal summary where they are always visible.
"""

ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
