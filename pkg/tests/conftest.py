"""Shared fixtures and the acceptance-summary terminal hook."""

import pytest

# test_acceptance.py appends (number, title, passed, note) tuples here; the
# terminal hook below prints one line per criterion after the run.
ACCEPTANCE_RESULTS = []


def record_criterion(number, title, failures, note=""):
    """Record one acceptance criterion outcome and fail the test if needed.

    ``failures`` is a list of human-readable mismatch strings; empty means
    the criterion passed.
    """
    passed = not failures
    ACCEPTANCE_RESULTS.append((number, title, passed, note))
    if not passed:
        pytest.fail(
            "criterion {} ({}) failed:\n  ".format(number, title)
            + "\n  ".join(failures),
            pytrace=False,
        )


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, note in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        line = "[{}] criterion {}: {}".format(status, number, title)
        if note:
            line += " -- " + note
        terminalreporter.write_line(line)
