from __future__ import annotations


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for i in sorted(RESULTS):
        ok, detail = RESULTS[i]
        terminalreporter.write_line(f"criterion {i:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
