import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    rows = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            if report.when != "call" and status == "passed":
                continue
            match = _CRITERION.search(report.nodeid)
            if match:
                key = int(match.group(1))
                if rows.get(key, ("", "PASS"))[1] == "PASS":
                    rows[key] = (match.group(2), "PASS" if status == "passed" else "FAIL")
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(rows):
        name, verdict = rows[key]
        terminalreporter.write_line(f"criterion {key:2d} {verdict}  {name}")
