from collections import Counter

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ansular.corpus import corpus, load
from ansular.graph_core import Graph

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def datasets():
    return corpus()


@pytest.fixture(scope="session")
def rep_s3():
    return load("rep_s3")


def build_graph(n, edges, legs):
    slots, att, E = Counter(), {}, []

    def new(v):
        h = (v, slots[v])
        slots[v] += 1
        att[h] = v
        return h

    for a, b in edges:
        E.append((new(a), new(b)))
    L = {str(i): new(v) for i, v in enumerate(legs)}
    return Graph.build(range(n), att, E, L)


@st.composite
def graphs(draw, max_vertices=4, max_extra=3, max_legs=2, connected=True):
    n = draw(st.integers(1, max_vertices))
    vertex = st.integers(0, n - 1)
    edges = [(i, draw(st.integers(0, i - 1))) for i in range(1, n)] if connected else []
    edges += draw(st.lists(st.tuples(vertex, vertex), max_size=max_extra))
    legs = draw(st.lists(vertex, max_size=max_legs))
    return build_graph(n, edges, legs)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
