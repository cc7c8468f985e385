import pytest

# criterion number -> [description, all tests passed so far]
CRITERIA: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, text): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    num, text = marker.args
    entry = CRITERIA.setdefault(num, [text, True])
    if report.failed:
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        text, ok = CRITERIA[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  [{num:2d}] {text}")
