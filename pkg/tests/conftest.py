from __future__ import annotations

import pytest

from docketd.crypto import XorKey
from docketd.store import RecordStore


@pytest.fixture
def xor_key():
    return XorKey(b"test-key-material")


@pytest.fixture
def store(tmp_path, xor_key):
    record_store = RecordStore(tmp_path / "data", xor_key)
    yield record_store
    record_store.close()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", None) != "call":
                continue
            if "test_acceptance" not in report.nodeid:
                continue
            name = report.nodeid.split("::")[-1]
            lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in sorted(lines):
        terminalreporter.write_line(f"{verdict}  {name}")
