import re

import pytest

from ingleton_groups.groups import closure, symmetric_group

# one representative of the S5 violation, in 1-based cycle notation
S5_GENS = (
    ["(3,4,5)", "(1,2)(4,5)"],
    ["(1,2,3,4,5)", "(1,4,3,5)"],
    ["(2,3)", "(1,3,4,2)"],
    ["(2,4)", "(1,2,5,4)"],
)


@pytest.fixture(scope="session")
def s5():
    return symmetric_group(5)


@pytest.fixture(scope="session")
def s5_tuple(s5):
    return tuple(closure(s5, [s5.parse(g) for g in gens]) for gens in S5_GENS)


_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    m = re.search(r"test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = f"{int(m.group(1)):2d} {m.group(2)}"
    if report.when == "call":
        _ACCEPTANCE[key] = "PASS" if report.passed else "FAIL"
    elif report.failed:
        _ACCEPTANCE[key] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"criterion {key}: {_ACCEPTANCE[key]}")
