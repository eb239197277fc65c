import networkx as nx
import pytest

from oddhom.catalog import (
    dodecahedron,
    named_graph,
    petersen,
    random_planar_cubic,
    theta,
    tight_example,
    tight_examples,
    wheel,
)
from oddhom.graph import GraphError, cycle, girth, is_two_connected


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_named_graphs_match_networkx():
    assert nx.is_isomorphic(_nx(petersen()), nx.petersen_graph())
    assert nx.is_isomorphic(_nx(dodecahedron()), nx.dodecahedral_graph())
    assert girth(dodecahedron()) == 5


def test_tight_examples_shape():
    ex = tight_examples()
    assert sorted(ex) == ["A", "B", "C"]
    for g in ex.values():
        assert (g.v, g.e) == (16, 18)
        assert is_two_connected(g)
    assert not nx.is_isomorphic(_nx(ex["A"]), _nx(ex["B"]))
    with pytest.raises(GraphError):
        tight_example("D")


@pytest.mark.parametrize("seed", range(6))
def test_random_planar_cubic(seed):
    g = random_planar_cubic(12, seed=seed)
    h = _nx(g)
    assert g.v == 20 and set(g.degrees()) == {3}
    assert nx.check_planarity(h)[0]
    assert nx.node_connectivity(h) == 3


def test_random_planar_cubic_is_reproducible():
    assert random_planar_cubic(10, seed=3) == random_planar_cubic(10, seed=3)


def test_theta_and_wheel():
    g = theta(2, 3, 4)
    assert (g.v, g.e) == (8, 9)
    with pytest.raises(GraphError):
        theta(1, 1)
    w = wheel(5)
    assert (w.v, w.e) == (6, 10)


def test_named_graph_lookup():
    assert named_graph("C7") == cycle(7)
    assert named_graph("k4").e == 6
    assert named_graph("tight-b") == tight_example("B")
    with pytest.raises(GraphError):
        named_graph("nope")
