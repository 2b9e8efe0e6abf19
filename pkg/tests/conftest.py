import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

# filled by test_acceptance: (number, title, passed, seconds)
ACCEPTANCE: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, secs in sorted(ACCEPTANCE):
        terminalreporter.write_line(
            f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {title}  ({secs:.1f} s)")
