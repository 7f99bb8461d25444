import random

import pytest
from hypothesis import strategies as st

from topominor.finite_tree import FiniteTree, random_tree


@st.composite
def trees(draw, max_nodes=7):
    n = draw(st.integers(1, max_nodes))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_tree(n, random.Random(seed))


@pytest.fixture
def rng():
    return random.Random(1234)


def leaf():
    return FiniteTree(())


def pytest_terminal_summary(terminalreporter):
    lines = [
        value
        for reports in terminalreporter.stats.values()
        for rep in reports
        if getattr(rep, "when", None) == "call"
        for name, value in getattr(rep, "user_properties", ())
        if name == "acceptance"
    ]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
