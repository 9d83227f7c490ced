import random

import pytest
from hypothesis import strategies as st

from strongdomatic.graph import Graph, from_edge_list


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def relabelings(draw, g: Graph):
    return draw(st.permutations(list(range(g.order))))


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


@pytest.fixture
def rng():
    return random.Random(1234)


_CRITERIA: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.outcome == "failed":
        name = report.nodeid.split("::")[-1].removeprefix("test_")
        if _CRITERIA.get(name) != "FAIL":
            _CRITERIA[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda s: int(s.split("_")[1])):
        terminalreporter.write_line(f"{_CRITERIA[name]}  {name}")
