import sys
from pathlib import Path

from hypothesis import settings

# exact arithmetic is fast but not deadline-fast on every draw
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

sys.path.insert(0, str(Path(__file__).parent))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, dt in sorted(RESULTS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({dt:.2f}s)")
