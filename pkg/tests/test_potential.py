import itertools
import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddhom.catalog import petersen, tight_example
from oddhom.graph import Graph, GraphError, complete, cycle, disjoint_union, identify, induced_subgraph, is_connected, path, subdivide_all
from oddhom.hom import find_hom
from oddhom.potential import (
    P17_15,
    PotentialParams,
    Subgraph,
    build_G_F_phi,
    connected_vertex_sets,
    density_predicates,
    find_extension,
    main_bound_value,
    ore_density_value,
    potential,
    potential_counts,
    subgraph_potential_scan,
)

from conftest import graphs

C7 = cycle(7)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_potential_examples():
    assert potential(tight_example("A")) == 2
    assert potential(C7) == 14
    assert potential(path(3)) == 4 * 17 - 3 * 15
    assert potential(Graph(1)) == 17
    assert potential(C7, PotentialParams(Fraction(1, 2), 1)) == Fraction(-7, 2)
    with pytest.raises(ValueError):
        PotentialParams(0, 1)


def test_density_predicates():
    d = density_predicates(tight_example("A"), 3)
    assert d["main_bound"] == {"rhs": "18", "holds": True, "equality": True}
    assert main_bound_value(16) == 18
    k8 = subdivide_all(complete(8), 4)
    d = density_predicates(k8, 3)
    assert d["ore_density"]["equality"] and ore_density_value(120, 3) == 140
    assert "basic_density" not in density_predicates(C7, 3)
    with pytest.raises(GraphError):
        density_predicates(C7, 3, basic=True)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10), graphs(max_n=10))
def test_potential_additive_over_disjoint_union(a, b):
    assert potential(disjoint_union(a, b)) == potential(a) + potential(b)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=1, max_n=10))
def test_potential_identity_and_monotonicity(g):
    p = potential(g)
    assert 30 * g.e - 34 * g.v == -2 * p
    assert potential_counts(g.v, g.e) == p
    for e in list(g.edges)[:3]:
        assert potential(Graph(g.n, g.edges - {e})) == p + 15


def test_G_F_phi_single_vertex():
    g = petersen()
    gf = build_G_F_phi(g, Subgraph({4}), C7, {4: 2})
    assert nx.is_isomorphic(_nx(gf.graph), _nx(g))
    assert gf.image_ids == {2: 9}


def test_G_F_phi_same_colour_is_identification():
    g = cycle(8)
    gf = build_G_F_phi(g, Subgraph({0, 2}), C7, {0: 3, 2: 3})
    ident, _ = identify(g, 0, 2)
    assert nx.is_isomorphic(_nx(gf.graph), _nx(ident))


def test_G_F_phi_edge_maps_onto_image_edge():
    g = cycle(9)
    gf = build_G_F_phi(g, Subgraph((), [(0, 1)]), C7, {0: 0, 1: 1})
    assert gf.graph.n == 9
    a, b = gf.image_ids[0], gf.image_ids[1]
    assert gf.graph.has_edge(a, b)


def test_extension_on_tight_cell():
    g = tight_example("A")
    F = Subgraph.induced(g, range(7))
    wit = find_extension(g, C7, F)
    assert wit.identity_holds() and wit.counts_hold()
    assert wit.F_prime.vertices > F.vertices
    assert find_hom(wit.G_F_phi.graph, C7) is None
    assert "potentials" in wit.to_dict()


def test_extension_on_long_string():
    g = tight_example("A")
    F = Subgraph((), [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)])
    wit = find_extension(g, C7, F)
    assert wit.identity_holds() and wit.counts_hold()


def test_extension_rejects_whole_graph_and_bad_subgraph():
    g = tight_example("A")
    with pytest.raises(GraphError):
        find_extension(g, C7, Subgraph(range(g.n), g.edges))
    with pytest.raises(GraphError):
        find_extension(g, C7, Subgraph((), [(0, 5)]))


@pytest.mark.parametrize("seed", range(15))
def test_extension_identity_random_subgraphs(seed):
    rng = random.Random(seed)
    g = subdivide_all(complete(6), 2)
    h = cycle(5)
    start = rng.randrange(g.n)
    vs = {start}
    while len(vs) < rng.randint(2, 8):
        vs.add(rng.choice([w for x in vs for w in g.adj[x]]))
    F = Subgraph.induced(g, vs)
    wit = find_extension(g, h, F)
    for params in (P17_15, PotentialParams(3, 2), PotentialParams(Fraction(7, 3), 1)):
        assert wit.identity_holds(params)
    assert wit.counts_hold()


@pytest.mark.parametrize("limit", [1, 3, 5])
def test_connected_sets_against_combinations(limit):
    g = petersen()
    got = list(connected_vertex_sets(g, limit))
    assert len(got) == len(set(got))
    want = {frozenset(c) for r in range(1, limit + 1) for c in itertools.combinations(range(g.n), r)
            if is_connected(induced_subgraph(g, c)[0])}
    assert set(got) == want


def _brute_scan(g, limit):
    best = None
    for r in range(1, limit + 1):
        for c in itertools.combinations(range(g.n), r):
            sub, _ = induced_subgraph(g, c)
            if is_connected(sub):
                p = potential(sub)
                best = p if best is None else min(best, p)
    return best


def test_scan_examples():
    assert subgraph_potential_scan(tight_example("A")).minimum == 14
    assert subgraph_potential_scan(complete(4), max_vertices=3).minimum == 6
    with pytest.raises(ValueError):
        subgraph_potential_scan(C7, max_vertices=13)


def test_scan_floors_on_tight_example():
    res = subgraph_potential_scan(tight_example("A"), max_vertices=7, floors=True)
    assert res.floor_violations == []


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=8), st.integers(1, 5))
def test_scan_matches_brute_force(g, limit):
    assert subgraph_potential_scan(g, max_vertices=limit).minimum == _brute_scan(g, limit)
