import os

import pytest


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False, help="run the slow verification cases")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow") or os.environ.get("BRAUERLAB_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="slow case; pass --slow or set BRAUERLAB_SLOW=1")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


# acceptance criteria: number -> list of (passed, message) parts
ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


@pytest.fixture
def record_criterion():
    def record(number: int, passed: bool, message: str):
        ACCEPTANCE.setdefault(number, []).append((bool(passed), message))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[number]
        status = "PASS" if all(ok for ok, _ in parts) else "FAIL"
        terminalreporter.write_line(f"{status} criterion {number:2d}: " + "; ".join(msg for _, msg in parts))
