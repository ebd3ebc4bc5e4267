import re
import sys
from pathlib import Path

import pytest

FIXDIR = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixdir() -> Path:
    return FIXDIR


@pytest.fixture(scope="session")
def fixture_files() -> list:
    files = sorted(FIXDIR.glob("*.jjc"))
    assert files, "no shipped fixture files found"
    return files


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one PASS/FAIL line per acceptance criterion after the run."""
    module = sys.modules.get("test_acceptance")
    recorded = getattr(module, "RESULTS", {}) if module else {}
    lines = {}
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            match = re.search(r"test_acceptance\.py::test_c(\d+)", getattr(report, "nodeid", ""))
            if not match:
                continue
            number = int(match.group(1))
            if outcome == "passed" and number in recorded:
                text, elapsed = recorded[number]
                lines[number] = f"PASS criterion {number}: {text} ({elapsed:.2f}s)"
            elif outcome != "passed":
                lines[number] = f"FAIL criterion {number}: {report.nodeid.split('::')[-1]}"
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
