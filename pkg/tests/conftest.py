import re

import pytest

from helpers import seeded


@pytest.fixture
def rng():
    return seeded(0)


_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the
    run, independent of verbosity."""
    results = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            m = _CRITERION.search(getattr(report, "nodeid", ""))
            if m:
                num = int(m.group(1))
                ok = outcome == "passed"
                results[num] = results.get(num, True) and ok
    if not results:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for num in sorted(results):
        word = "pass" if results[num] else "FAIL"
        terminalreporter.write_line(f"criterion {num:2d}: {word}")
