import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddhom.catalog import theta, tight_example
from oddhom.graph import Graph, complete, cycle, relabel, subdivide_all
from oddhom.structure import (
    FAILS,
    HOLDS,
    NOT_APPLICABLE,
    StructureError,
    audit_lemmas,
    cycles_of_length,
    decompose,
    find_cells,
    structure_report,
    vertex_profile,
    vertex_profiles,
    vertex_weight_bound,
)

from conftest import graphs, random_min_degree


def test_theta_decomposition():
    g = theta(2, 3, 4)
    dec = decompose(g)
    assert dec.branch_vertices == [0, 1]
    assert [s.k for s in dec.strings] == [1, 2, 3]
    assert not dec.pure_cycles
    for v in (0, 1):
        p = vertex_profile(g, v, dec)
        assert (p.degree, p.type, p.weight) == (3, (3, 2, 1), 6)


def test_theta_cells_and_audit():
    g = theta(2, 3, 4)
    cells = find_cells(g, 3)
    assert len(cells) == 1
    c = cells[0]
    assert sorted(c.vertices) == [0, 1, 3, 4, 5, 6, 7]
    assert (c.degree, c.type, c.weight) == (1, (1,), 1)
    rep = audit_lemmas(g, 3)
    # not critical: the 1- and 3-strings share ends and parity
    assert rep.status("string_parity") == FAILS
    assert rep.status("max_string") == HOLDS


def test_pure_cycle():
    dec = decompose(cycle(9))
    assert dec.branch_vertices == [] and dec.strings == []
    assert dec.pure_cycles == [tuple(range(9))]


def test_low_degree_rejected():
    with pytest.raises(StructureError):
        decompose(Graph(3, [(0, 1), (1, 2)]))
    with pytest.raises(StructureError):
        vertex_profile(cycle(7), 0)


def test_tight_example_a_decomposition():
    g = tight_example("A")
    dec = decompose(g)
    assert dec.branch_vertices == [0, 1, 6, 11]
    assert sorted(s.k for s in dec.strings) == [0, 0, 0, 4, 4, 4]
    profs = {p.vertex: (p.type, p.weight) for p in vertex_profiles(g, dec)}
    assert profs == {0: ((0, 0, 0), 0), 1: ((4, 4, 0), 8), 6: ((4, 4, 0), 8), 11: ((4, 4, 0), 8)}


def test_tight_example_a_has_three_cells():
    cells = find_cells(tight_example("A"), 3)
    assert [c.vertices for c in cells] == [
        (0, 1, 2, 3, 4, 5, 6),
        (0, 1, 7, 8, 9, 10, 11),
        (0, 6, 15, 14, 13, 12, 11),
    ]
    for c in cells:
        assert (c.degree, c.type, c.weight) == (3, (4, 4, 0), 8)


def test_tight_example_a_audit():
    rep = audit_lemmas(tight_example("A"), 3)
    assert all(rep.status(k) != FAILS for k in (
        "two_connected", "max_string", "string_parity", "vertex_weight", "strings_in_cells", "cell_weight"))
    # a critical graph, but not a minimum counterexample
    assert rep.status("cells_vertex_disjoint") == FAILS
    assert rep.status("girth_at_least_7") == HOLDS


def test_ore_k6_weight_meets_bound():
    g = subdivide_all(complete(6), 2)
    p = vertex_profile(g, 0)
    assert (p.degree, p.weight) == (5, 10)
    assert vertex_weight_bound(2, 5) == 10
    rep = audit_lemmas(g, 2)
    assert rep.status("vertex_weight") == HOLDS
    assert rep.status("girth_at_least_7") == NOT_APPLICABLE


def test_ore_k8_profile():
    g = subdivide_all(complete(8), 4)
    p = vertex_profile(g, 0)
    assert p.type == (4,) * 7 and p.weight == 28
    assert find_cells(g, 3) == []


def test_short_cycle_audit():
    rep = audit_lemmas(cycle(5), 3)
    assert rep.status("max_string") == NOT_APPLICABLE
    assert rep.status("girth_at_least_7") == FAILS
    assert "lemmas" in rep.to_dict()


def test_cycles_of_length_count():
    assert len(cycles_of_length(complete(5), 5)) == 12
    assert len(cycles_of_length(complete(4), 3)) == 4
    assert cycles_of_length(cycle(7), 7) == [tuple(range(7))]


def test_structure_report_shape():
    rep = structure_report(tight_example("B"), 3)
    assert set(rep) == {"decomposition", "profiles", "cells"}


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=3, max_n=10))
def test_strings_partition_edges(g):
    if g.min_degree() < 2:
        return
    dec = decompose(g)
    seen = []
    for s in dec.strings:
        seen.extend(s.edges())
        assert all(g.degree(x) == 2 for x in s.interior)
        assert g.degree(s.a) >= 3 and g.degree(s.b) >= 3
    for c in dec.pure_cycles:
        seen.extend((min(a, b), max(a, b)) for a, b in zip(c, c[1:] + c[:1]))
    assert len(seen) == len(set(seen)) == g.e
    assert set(seen) == g.edges


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=3, max_n=9), st.randoms(use_true_random=False))
def test_cells_invariant_under_relabelling(g, rnd):
    if g.min_degree() < 2:
        return
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    for t in (1, 2):
        a = sorted((c.degree, c.type) for c in find_cells(g, t))
        b = sorted((c.degree, c.type) for c in find_cells(h, t))
        assert a == b


def _brute_cycles(g, L):
    found = set()
    def go(p):
        if len(p) == L:
            if g.has_edge(p[-1], p[0]):
                found.add(frozenset((min(a, b), max(a, b)) for a, b in zip(p, p[1:] + p[:1])))
            return
        for w in g.adj[p[-1]]:
            if w > p[0] and w not in p:
                go(p + [w])
    for s in range(g.n):
        go([s])
    return found


@pytest.mark.parametrize("seed", range(30))
def test_cycles_of_length_matches_path_search(seed):
    rng = random.Random(seed)
    g = random_min_degree(rng, rng.randint(5, 9), 0.35)
    for L in (3, 5, 7):
        got = {frozenset((min(a, b), max(a, b)) for a, b in zip(c, c[1:] + c[:1])) for c in cycles_of_length(g, L)}
        assert got == _brute_cycles(g, L)
        assert len(got) == len(cycles_of_length(g, L))
