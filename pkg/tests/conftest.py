"""Shared pytest wiring: the acceptance suite reports one line per
criterion in the terminal summary, visible regardless of capture."""

_criterion_lines = []


def record_criterion(num, ok, detail):
    status = "PASS" if ok else "FAIL"
    _criterion_lines.append(f"[criterion {num}] {status} - {detail}")


def pytest_terminal_summary(terminalreporter):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_criterion_lines):
            terminalreporter.write_line(line)
