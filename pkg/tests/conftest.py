import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

# criterion number -> (passed, summary line); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        item.call_report = report


@pytest.fixture
def criterion(request):
    """Record one acceptance line: ``note(number, text)`` inside the test."""
    state: dict = {}

    def note(number: int, text: str) -> None:
        state["number"], state["text"] = number, text

    yield note
    report = getattr(request.node, "call_report", None)
    if "number" in state:
        passed = report is not None and report.passed
        ACCEPTANCE[state["number"]] = (passed, state["text"])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, text = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if passed else 'FAIL'}  {text}")
