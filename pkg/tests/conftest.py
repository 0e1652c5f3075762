import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# filled by test_acceptance: (label, passed, detail)
ACCEPTANCE: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in sorted(ACCEPTANCE, key=lambda r: _order(r[0])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}: {detail}")


def _order(label):
    head = label.split()[1]
    num = "".join(ch for ch in head if ch.isdigit())
    return (int(num) if num else 99, label)
