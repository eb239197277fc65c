from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from oddhom.graph import Graph, cycle
from oddhom.structure import CRITICAL_GRAPH_THEOREMS, FAILS, audit_lemmas

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, min_n=0, max_n=9, max_edges=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    if not pairs:
        return Graph(n, [])
    es = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges or len(pairs)))
    return Graph(n, es)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])


def random_min_degree(rng: random.Random, n: int, p: float, min_deg: int = 2) -> Graph:
    """Random graph, then edges added until every vertex reaches ``min_deg``."""
    g = random_graph(rng, n, p)
    es = set(g.edges)
    for u in range(n):
        while sum(1 for e in es if u in e) < min_deg:
            v = rng.randrange(n)
            if v != u:
                es.add((min(u, v), max(u, v)))
    return Graph(n, es)


def assert_critical_structure(g: Graph, t: int) -> None:
    """Statements proven for every C_{2t+1}-critical graph must audit clean."""
    rep = audit_lemmas(g, t)
    bad = {k: rep.results[k].to_dict() for k in CRITICAL_GRAPH_THEOREMS if rep.status(k) == FAILS}
    assert not bad, bad


@pytest.fixture
def c7():
    return cycle(7)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
