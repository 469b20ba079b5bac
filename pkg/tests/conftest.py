"""Shared pytest plumbing.

Collects acceptance-criterion outcomes so the terminal summary ends with one
pass/fail line per criterion.
"""

_CRITERIA: list[tuple[int, str, bool]] = []


def record_criterion(num: int, description: str, passed: bool) -> None:
    _CRITERIA.append((num, description, bool(passed)))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, ok in sorted(_CRITERIA):
        terminalreporter.write_line(
            f"criterion {num} {'PASS' if ok else 'FAIL'}: {desc}")
