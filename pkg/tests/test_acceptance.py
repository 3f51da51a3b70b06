"""Acceptance gate: every criterion, exact, within its time limit.

Prints one PASS/FAIL line per criterion; the lines are also collected into an
"acceptance criteria" section of the pytest terminal summary.
"""

import pytest

from modhodge.checks import CHECKS, run_check


@pytest.mark.parametrize("check", CHECKS, ids=[f"criterion-{c.id:02d}" for c in CHECKS])
def test_criterion(check, acceptance_log):
    result = run_check(check)
    line = (f"criterion {check.id:2d} {'PASS' if result.passed else 'FAIL'}: {check.title} "
            f"({result.seconds:.2f}s, limit {check.limit:.0f}s) {result.detail}")
    print(line)
    acceptance_log(line)
    assert result.passed, line
