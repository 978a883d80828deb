"""Shared pytest hooks.

The acceptance suite records one line per criterion in ``ACCEPTANCE_LINES``;
they are echoed in the terminal summary so they are visible without ``-s``.
"""

ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
