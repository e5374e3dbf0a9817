import acceptance_log


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance_log.RESULTS):
        passed, detail = acceptance_log.RESULTS[number]
        terminalreporter.write_line(f"AC{number} {'PASS' if passed else 'FAIL'}  {detail}")
