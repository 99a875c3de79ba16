from __future__ import annotations

import sys

import pytest

from grover_support.graphcore import builtin, parse_adjlist

REGULAR_FIXTURES = ["K4", "C5", "petersen", "heawood", "mcgee", "tutte_coxeter", "complete5"]

# irregular, minimum degree 3: K4 and K5 joined by the bridge 0-4
IRREGULAR_ADJ = """\
0: 1 2 3 4
1: 2 3
2: 3
3:
4: 5 6 7 8
5: 6 7 8
6: 7 8
7: 8
8:
"""


@pytest.fixture(scope="session")
def petersen():
    return builtin("petersen")


@pytest.fixture(scope="session")
def k4():
    return builtin("K4")


@pytest.fixture(scope="session")
def mcgee():
    return builtin("mcgee")


@pytest.fixture(scope="session")
def irregular():
    return parse_adjlist(IRREGULAR_ADJ)


@pytest.fixture(params=REGULAR_FIXTURES, scope="session")
def regular_graph(request):
    return builtin(request.param)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number].line())
