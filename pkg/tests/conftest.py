import random

import pytest

from pbtd.core import DesignArray
from pbtd.io import table1


@pytest.fixture
def t1():
    return table1()


@pytest.fixture
def tiny():
    return DesignArray(1, [[(0, 1)]])


@pytest.fixture
def rng():
    return random.Random(20240517)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line per test; printed in the terminal summary."""
    record = {"name": request.node.name, "detail": ""}
    yield record
    ACCEPTANCE_LINES.append(record)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and "criterion" in item.fixturenames:
        item._acceptance_passed = report.passed


def pytest_runtest_teardown(item):
    if "criterion" in item.fixturenames:
        item.funcargs["criterion"]["passed"] = getattr(item, "_acceptance_passed", False)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for rec in ACCEPTANCE_LINES:
        status = "PASS" if rec.get("passed") else "FAIL"
        terminalreporter.write_line(f"{status}  {rec['name']}  {rec['detail']}")
