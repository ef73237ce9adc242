import numpy as np
import pytest

_acceptance: dict[str, list[str]] = {}


@pytest.fixture
def rng():
    return np.random.default_rng(20020630)


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _acceptance.setdefault(crit, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_acceptance, key=lambda c: int(c.split()[0])):
        outcomes = _acceptance[crit]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"{status}  {crit}")
