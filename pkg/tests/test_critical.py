import itertools
import random

import pytest

from oddhom.catalog import petersen, tight_examples
from oddhom.critical import (
    CRITICAL,
    NOT_HOM_FREE,
    NOT_MINIMAL,
    critical_edge_set,
    extract_critical_subgraph,
    is_critical,
)
from oddhom.graph import Graph, complete, cycle, delete_vertex, disjoint_union, subdivide_all
from oddhom.hom import find_hom

from conftest import assert_critical_structure, random_min_degree

C7 = cycle(7)


@pytest.mark.parametrize("name", ["A", "B", "C"])
def test_tight_examples_are_critical(name):
    g = tight_examples()[name]
    rep = is_critical(g, C7)
    assert rep.critical and rep.is_hom_free
    assert_critical_structure(g, 3)


@pytest.mark.parametrize("t", range(1, 6))
@pytest.mark.parametrize("k", range(1, 6))
def test_odd_cycles(t, k):
    rep = is_critical(cycle(2 * k + 1), cycle(2 * t + 1))
    if k < t:
        assert rep.verdict == CRITICAL
    else:
        assert rep.verdict == NOT_HOM_FREE
        assert rep.witness is not None


def test_not_minimal_reports_an_edge():
    g = disjoint_union(cycle(3), cycle(5))
    rep = is_critical(g, C7)
    assert rep.verdict == NOT_MINIMAL and rep.failing_edge is not None
    rep = is_critical(Graph(4, [(0, 1), (1, 2), (0, 2)]), C7)
    assert rep.verdict == NOT_MINIMAL and rep.isolated_vertices == [3]
    assert rep.to_dict()["verdict"] == NOT_MINIMAL


def test_ore_k8_is_critical():
    g = subdivide_all(complete(8), 4)
    assert is_critical(g, C7).critical


def test_extract_from_triangle_with_tail():
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)])
    assert extract_critical_subgraph(g, C7) == cycle(3)
    assert critical_edge_set(g, C7) == [(0, 1), (0, 2), (1, 2)]


def test_extract_is_deterministic_on_two_odd_cycles():
    g = disjoint_union(cycle(3), cycle(5))
    # the triangle edges come first in lexicographic order and are dropped
    assert critical_edge_set(g, C7) == [(3, 4), (3, 7), (4, 5), (5, 6), (6, 7)]
    assert extract_critical_subgraph(g, C7) == cycle(5)


def test_extract_rejects_hom_graph():
    with pytest.raises(ValueError):
        critical_edge_set(cycle(9), C7)


def test_extract_of_critical_graph_is_itself():
    g = subdivide_all(complete(8), 4)
    assert critical_edge_set(g, C7) == g.sorted_edges()


def test_petersen_has_no_c5_colouring():
    # circular chromatic number 3, so no map to C5 despite odd girth 5
    assert find_hom(petersen(), cycle(5)) is None
    sub = extract_critical_subgraph(petersen(), cycle(5))
    assert is_critical(sub, cycle(5)).critical
    assert is_critical(petersen(), cycle(7)).verdict == NOT_MINIMAL


def _every_vertex_deletion_maps(g, h):
    return all(find_hom(delete_vertex(g, v)[0], h) is not None for v in range(g.n))


@pytest.mark.parametrize("seed", range(200))
def test_extraction_self_consistency(seed):
    rng = random.Random(seed)
    t = rng.choice([1, 2, 3])
    h = cycle(2 * t + 1)
    n = rng.randint(4, 11)
    g = random_min_degree(rng, n, rng.choice([0.2, 0.3, 0.45]))
    if find_hom(g, h) is not None:
        return
    edges = critical_edge_set(g, h)
    assert set(edges) <= g.edges
    sub = extract_critical_subgraph(g, h)
    rep = is_critical(sub, h)
    assert rep.critical
    assert _every_vertex_deletion_maps(sub, h)
    assert_critical_structure(sub, t)


def test_brute_force_minimality_on_small_critical_graph():
    # every proper edge subset of a critical graph maps to the target
    k4 = complete(4)
    c3 = cycle(3)
    assert is_critical(k4, c3).critical
    es = k4.sorted_edges()
    for r in range(len(es)):
        for keep in itertools.combinations(es, r):
            assert find_hom(Graph(4, keep), c3) is not None
