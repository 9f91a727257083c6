import pytest

from fuzzyrel import datasets, new_relation

GRADES = ["A", "B", "C", "D", "F"]
STAGES = ["R", "I", "G", "Ca"]
CLASSROOM_Q = [
    [0.7, 0.5, 0.3, 0],
    [0.4, 0.6, 0.3, 0.1],
    [0.2, 0.7, 0.6, 0.2],
    [0.1, 0.5, 0.7, 0.5],
    [0, 0.1, 0.5, 0.8],
]
CLASSROOM_P = [0.33, 0.25, 0.12, 0.17, 0.13]
CLASSROOM_R = [0.33, 0.33, 0.3, 0.17]
UNSOLVABLE_R = [1, 0.33, 0.3, 0.17]
# frozen from tests/oracles.py over the grid {0, 0.17, 0.3, 0.33, 1}^5
CLASSROOM_GREATEST = (0.33, 0.33, 0.17, 0.17, 0.17)
CLASSROOM_MINIMALS = [
    (0, 0.33, 0, 0, 0.17),
    (0, 0.33, 0, 0.17, 0),
    (0, 0.33, 0.17, 0, 0),
    (0.33, 0, 0, 0, 0.17),
    (0.33, 0, 0, 0.17, 0),
    (0.33, 0, 0.17, 0, 0),
]


@pytest.fixture
def classroom_q():
    return new_relation(GRADES, STAGES, CLASSROOM_Q)


@pytest.fixture
def classroom_r():
    return new_relation(["M"], STAGES, [CLASSROOM_R])


@pytest.fixture
def classroom_p():
    return new_relation(["M"], GRADES, [CLASSROOM_P])


@pytest.fixture
def unsolvable_r():
    return new_relation(["M"], STAGES, [UNSOLVABLE_R])


@pytest.fixture
def ex_p():
    return datasets.load_relation("composition_p")


@pytest.fixture
def ex_q():
    return datasets.load_relation("composition_q")


@pytest.fixture
def data_dir():
    return datasets.path("classroom_q").parent


# one pass/fail line per acceptance criterion in the terminal summary

_acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    failed = report.failed
    passed = report.when == "call" and report.passed
    prev = _acceptance.get(number, (title, True, False))
    _acceptance[number] = (title, prev[1] and not failed, prev[2] or passed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, ok, ran = _acceptance[number]
        status = "PASS" if ok and ran else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
