import io
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddhom.critical import is_critical
from oddhom.enumeration import (
    canonical_form,
    canonical_graph,
    count_graphs,
    enumerate_critical,
    graphs_by_edge_addition,
    stream_critical,
)
from oddhom.formats import emit_graph6, parse_graph6
from oddhom.graph import Graph, GraphError, complete, cycle, path, relabel, subdivide_all

from conftest import graphs


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_canonical_form_examples():
    assert canonical_form(cycle(3)) == b"Bw"
    assert canonical_form(cycle(7)) == b"F@Ue?"
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert canonical_form(star) != canonical_form(path(3))
    assert canonical_graph(relabel(cycle(5), [2, 4, 1, 0, 3])) == canonical_graph(cycle(5))
    with pytest.raises(GraphError):
        canonical_form(Graph(11))


def test_cycle_relabellings_share_a_form():
    rng = random.Random(0)
    forms = set()
    for _ in range(100):
        perm = list(range(7))
        rng.shuffle(perm)
        forms.add(canonical_form(relabel(cycle(7), perm)))
    assert forms == {b"F@Ue?"}


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_canonical_form_is_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert canonical_form(g) == canonical_form(h)
    assert nx.is_isomorphic(_nx(canonical_graph(g)), _nx(g))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_canonical_form_separates_non_isomorphic(a, b):
    same = canonical_form(a) == canonical_form(b)
    assert same == (a.n == b.n and nx.is_isomorphic(_nx(a), _nx(b)))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_graph_counts(n, count):
    # number of unlabelled graphs on n vertices
    assert count_graphs(n) == count


def test_generated_graphs_are_distinct():
    gs = list(graphs_by_edge_addition(5))
    for i, a in enumerate(gs):
        for b in gs[i + 1:]:
            assert not nx.is_isomorphic(_nx(a), _nx(b))


@pytest.mark.parametrize("t,n_max,want", [(1, 5, ["C~"]), (2, 7, ["Bw"]), (3, 8, ["Bw", "DLo"])])
def test_small_critical_graphs(t, n_max, want):
    res = enumerate_critical(t, n_max)
    assert res.critical == want
    for g6 in res.critical:
        assert is_critical(parse_graph6(g6), cycle(2 * t + 1)).critical


@pytest.mark.parametrize("t", [1, 2, 3])
def test_pruning_does_not_lose_graphs(t):
    a = enumerate_critical(t, 6, prune=True)
    b = enumerate_critical(t, 6, prune=False)
    assert a.critical == b.critical
    assert sum(a.candidates_per_n.values()) <= sum(b.candidates_per_n.values())


def test_enumeration_limits():
    with pytest.raises(ValueError):
        enumerate_critical(3, 9)
    with pytest.raises(ValueError):
        enumerate_critical(0, 4)


def test_parallel_matches_serial():
    assert enumerate_critical(1, 6, workers=2).to_dict() == enumerate_critical(1, 6, workers=1).to_dict()


def test_stream_filter():
    lines = ["Bw", "", "bad\x01", emit_graph6(cycle(9)), "DLo", emit_graph6(relabel(cycle(5), [1, 0, 2, 3, 4]))]
    res = stream_critical(3, lines)
    assert res.critical == ["Bw", "DLo"]
    assert res.errors == [{"line": 3, "error": res.errors[0]["error"]}]
    assert res.candidates_per_n == {3: 1, 5: 1, 9: 1}
    assert res.min_potential == 6


def test_stream_accepts_bytes_and_large_graphs():
    k8 = subdivide_all(complete(8), 4)
    stream = io.BytesIO((emit_graph6(k8) + "\n" + "Bw\n").encode())
    res = stream_critical(3, stream)
    assert len(res.critical) == 2 and res.n_range == (3, 120)


def test_empty_stream():
    res = stream_critical(2, [])
    assert res.critical == [] and res.min_potential is None


def test_canonical_forms_distinguish_the_atlas():
    forms = {}
    for h in nx.graph_atlas_g():
        g = Graph(h.number_of_nodes(), list(h.edges()))
        forms.setdefault(g.n, set()).add(canonical_form(g))
    counts = {n: len(f) for n, f in forms.items()}
    assert counts == {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def test_unpruned_search_to_eight_vertices():
    res = enumerate_critical(3, 8, prune=False, workers=2)
    assert res.critical == ["Bw", "DLo"]
    assert res.critical == enumerate_critical(3, 8, prune=True).critical
