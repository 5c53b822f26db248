"""Shared pytest wiring.

Collects the outcome of each test_criterion_* function in the acceptance
gate and prints one PASS/FAIL line per criterion in the terminal summary.
"""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)_(\w+)")
_results: dict[int, tuple[str, bool]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    num = int(m.group(1))
    desc = m.group(2).replace("_", " ")
    already_failed = _results.get(num, ("", False))[1]
    _results[num] = (desc, already_failed or report.outcome != "passed")


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        desc, failed = _results[num]
        status = "FAIL" if failed else "PASS"
        terminalreporter.write_line(f"CRITERION {num}: {status} - {desc}")
