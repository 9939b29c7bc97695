import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    total = 0.0
    for number in sorted(mod.RESULTS):
        ok, title, secs, detail = mod.RESULTS[number]
        total += secs
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({secs:.2f}s)"
        terminalreporter.write_line(f"{line} {detail}".rstrip())
    terminalreporter.write_line(f"acceptance total: {total:.2f}s")
