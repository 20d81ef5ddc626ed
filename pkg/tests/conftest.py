import os
from collections import OrderedDict

import pytest

LONG = os.environ.get("SHADOWBASIS_LONG", "") in ("1", "true", "yes")

_criteria: "OrderedDict[int, dict]" = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "long: slow checks, run with SHADOWBASIS_LONG=1")
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_collection_modifyitems(config, items):
    if LONG:
        return
    skip = pytest.mark.skip(reason="long mode only (SHADOWBASIS_LONG=1)")
    for item in items:
        if "long" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def note(request):
    """Attach a line of detail to the criterion summary of the running test."""
    mark = request.node.get_closest_marker("criterion")

    def add(text: str) -> None:
        if mark is not None:
            number, title = mark.args
            entry = _criteria.setdefault(number, {"title": title, "passed": 0, "failed": 0, "skipped": 0})
            entry.setdefault("notes", []).append(text)

    return add


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    entry = _criteria.setdefault(number, {"title": title, "passed": 0, "failed": 0, "skipped": 0})
    if report.when == "call":
        entry["passed" if report.passed else "failed"] += 1
    elif report.when == "setup" and report.skipped:
        entry["skipped"] += 1
    elif report.failed:
        entry["failed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        e = _criteria[number]
        status = "FAIL" if e["failed"] else "PASS" if e["passed"] else "SKIP"
        extra = f", {e['skipped']} long-mode check(s) skipped" if e["skipped"] else ""
        terminalreporter.write_line(
            f"{status} criterion {number:>2}: {e['title']} ({e['passed']} passed, {e['failed']} failed{extra})"
        )
        for text in e.get("notes", []):
            terminalreporter.write_line(f"       {text}")
