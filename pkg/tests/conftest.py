import pytest

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when not in ("setup", "call"):
        return
    if rep.when == "setup" and rep.passed:
        return
    key = marker.args[0]
    # a parametrized criterion passes only if every case does
    prev = _results.get(key, (None, True))[1]
    _results[key] = (marker.args[1], prev and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_results):
        title, ok = _results[key]
        terminalreporter.write_line(f"AC{key:<2} {'PASS' if ok else 'FAIL'}  {title}")
