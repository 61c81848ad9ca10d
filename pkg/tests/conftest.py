import pytest
from hypothesis import strategies as st

from kcolored import ColoredDigraph


def make(n, parts, arcs, m=None):
    if m is None:
        m = max([c for _, _, c in arcs], default=0) + 1
    return ColoredDigraph(n, parts, arcs, m)


def flower(s, colors):
    """Center 0 with petals 1..s; ``colors`` gives (out, in) colors per petal."""
    arcs = []
    for i in range(1, s + 1):
        c_out, c_in = colors[i - 1]
        arcs += [(0, i, c_out), (i, 0, c_in)]
    parts = [[0], list(range(1, s + 1))] if s else [[0]]
    return make(s + 1, parts, arcs)


@pytest.fixture
def G1():
    return make(3, [[0], [1], [2]], [(0, 1, 0), (1, 2, 1), (2, 0, 2)])


@pytest.fixture
def G3():
    return make(4, [[0, 2], [1, 3]], [(0, 1, 0), (1, 2, 1), (2, 3, 2), (3, 0, 3)])


@pytest.fixture
def C3C3_graph():
    # L=0, T=1, R=2, B=3
    return make(4, [[0], [1], [2], [3]], [(0, 1, 0), (1, 2, 0), (0, 3, 0), (3, 2, 0), (2, 0, 0)])


@pytest.fixture
def C4C4_graph():
    # L=0, M=1, R=2, T=3, B=4
    return make(5, [[v] for v in range(5)],
                [(0, 1, 0), (1, 2, 0), (2, 3, 0), (3, 0, 0), (2, 4, 0), (4, 0, 0)])


@st.composite
def small_digraphs(draw, max_n=6, max_m=3, multipartite=False):
    """Colored digraphs on at most ``max_n`` vertices.

    With ``multipartite`` the result is semicomplete multipartite.
    """
    n = draw(st.integers(2 if multipartite else 1, max_n))
    m = draw(st.integers(1, max_m))
    if multipartite:
        r = draw(st.integers(2, n))
        part_of = list(range(r)) + draw(st.lists(st.integers(0, r - 1), min_size=n - r, max_size=n - r))
        parts = [[v for v in range(n) if part_of[v] == p] for p in range(r)]
    else:
        part_of = list(range(n))
        parts = [[v] for v in range(n)]
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if part_of[u] == part_of[v]:
                continue
            state = draw(st.integers(0, 2 if multipartite else 3))
            if state in (0, 2):
                arcs.append((u, v, draw(st.integers(0, m - 1))))
            if state in (1, 2):
                arcs.append((v, u, draw(st.integers(0, m - 1))))
    return ColoredDigraph(n, parts, arcs, m)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
