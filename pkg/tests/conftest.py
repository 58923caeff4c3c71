import pytest

# criterion number -> (passed, detail); filled by test_acceptance.py
CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    number = getattr(item.function, "criterion", None)
    if number is None or report.when != "call":
        return
    detail = CRITERIA.get(number, (None, ""))[1]
    if report.failed:
        message = str(call.excinfo.value).splitlines()[0] if call.excinfo else ""
        detail = detail or message
    CRITERIA[number] = (report.passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        passed, detail = CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
