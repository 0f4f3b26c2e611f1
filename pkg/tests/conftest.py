"""Acceptance bookkeeping shared by the test suite.

The gate in test_acceptance.py records named sub-checks under a criterion
label; after the run, the terminal summary prints one PASS/FAIL line per
criterion so the verdict survives in piped output.
"""

import pytest

_RESULTS: dict[str, list[tuple[str, bool, str]]] = {}


@pytest.fixture
def acceptance():
    def check(criterion: str, name: str, ok: bool, detail: str = "") -> None:
        _RESULTS.setdefault(criterion, []).append((name, bool(ok), detail))
        assert ok, f"[{criterion}] {name}: {detail}" if detail else name
    return check


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_RESULTS):
        failed = [f"{name} {detail}".rstrip()
                  for name, ok, detail in _RESULTS[criterion] if not ok]
        if failed:
            terminalreporter.write_line(
                f"criterion {criterion}: FAIL ({'; '.join(failed)})")
        else:
            terminalreporter.write_line(f"criterion {criterion}: PASS")
