from __future__ import annotations

import pytest
from hypothesis import strategies as st

from replacement_paths.graph import Graph, parse_graph

TRIANGLE_DIMACS = "c triangle\np sp 3 3\na 1 2 1\na 2 3 1\na 1 3 10\n"

ACCEPTANCE_LINES: list = []


@pytest.fixture
def triangle() -> Graph:
    g, _ = parse_graph(TRIANGLE_DIMACS, "dimacs", 1, 3)
    return g


@pytest.fixture
def forest_instance() -> Graph:
    """Path s-v1-v2-t, b hangs off v1, detours (s,b,4) and (b,t,1)."""
    s, v1, v2, t, b = range(5)
    return Graph.from_edges(
        5,
        [(s, v1, 1), (v1, v2, 1), (v2, t, 1), (v1, b, 1), (s, b, 4), (b, t, 1)],
        s,
        t,
    )


@st.composite
def connected_graphs(draw, max_n: int = 12, max_weight: int = 20, max_extra: int = 25):
    """Small connected multigraphs with low weights, so ties are frequent."""
    n = draw(st.integers(2, max_n))
    edges = []
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.append((u, v, draw(st.integers(1, max_weight))))
    extra = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, max_weight)),
        max_size=max_extra,
    ))
    edges += [e for e in extra if e[0] != e[1]]
    perm = draw(st.permutations(range(len(edges))))
    edges = [edges[k] for k in perm]
    s = draw(st.integers(0, n - 1))
    t = draw(st.integers(0, n - 1).filter(lambda x: x != s))
    return Graph.from_edges(n, edges, s, t)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
