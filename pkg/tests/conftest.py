import pytest

_verdicts: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    n, title = mark.args
    msg = ""
    if rep.failed:
        msg = str(call.excinfo.value).splitlines()[0] if call.excinfo else "failed"
    _verdicts[n] = (title, rep.passed, msg)


def pytest_terminal_summary(terminalreporter):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_verdicts):
        title, ok, msg = _verdicts[n]
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}"
        if msg:
            line += f"  [{msg}]"
        terminalreporter.write_line(line)
