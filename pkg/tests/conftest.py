from pathlib import Path

import pytest

from bettibound.betti import parse_betti_diagram

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def example1_text():
    return (DATA / "example1.txt").read_text()


@pytest.fixture(scope="session")
def example3_text():
    return (DATA / "example3.txt").read_text()


@pytest.fixture(scope="session")
def example1(example1_text):
    return parse_betti_diagram(example1_text)


@pytest.fixture(scope="session")
def example3(example3_text):
    return parse_betti_diagram(example3_text)


# -- acceptance summary ---------------------------------------------------------

_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key in report.keywords:
        if key.startswith("AC") and key[2:].isdigit():
            ok = report.passed
            _criteria[int(key[2:])] = _criteria.get(int(key[2:]), True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if _criteria[n] else 'FAIL'}")


def pytest_configure(config):
    for n in range(1, 10):
        config.addinivalue_line("markers", f"AC{n}: acceptance criterion {n}")
