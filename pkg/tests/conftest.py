import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None)
settings.load_profile("default")

_CRITERIA = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    name = report.nodeid.split("::")[-1]
    if "test_acceptance.py" in report.nodeid and name.startswith("test_criterion_"):
        _CRITERIA[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    from test_acceptance import CRITERIA, RESULTS

    terminalreporter.section("acceptance criteria")
    for number, (title, fn) in CRITERIA.items():
        outcome = _CRITERIA.get(fn.__name__)
        if outcome is None:
            continue
        mark = "PASS" if outcome == "passed" else "FAIL"
        line = f"criterion {number}: {mark}  {title}"
        if number in RESULTS:
            _, elapsed, detail = RESULTS[number]
            line += f" ({elapsed:.2f}s) {detail}"
        terminalreporter.write_line(line)


@pytest.fixture(params=["QQ", "GF(2)", "GF(3)"])
def field(request):
    from skewcat.exactlin import FieldSpec

    return FieldSpec.from_name(request.param)
