import pytest

from cayleyham.errors import GraphError
from cayleyham.multigraph import (MultiGraph, complete_bipartite, complete_graph, cube_graph, dodecahedron_graph,
                                  generalized_petersen, heawood_graph, moebius_kantor_graph, petersen_graph,
                                  theta_graph)

from oracles import nx_isomorphic


def test_edges_have_identities():
    g = MultiGraph(2)
    e1, e2 = g.add_edge(0, 1), g.add_edge(0, 1)
    assert (e1, e2) == (0, 1)
    assert g.multiplicity()[(0, 1)] == 2
    assert g.has_parallel_edges()


def test_loops_rejected():
    with pytest.raises(GraphError):
        MultiGraph(1, [(0, 0)])


def test_forest_and_tree_respect_parallel_edges():
    g = theta_graph()
    assert not g.is_forest([0, 1])
    assert g.is_tree([0])
    assert g.induced_edge_count([0, 1]) == 3


@pytest.mark.parametrize("build,n", [(theta_graph, 2), (lambda: complete_graph(4), 4),
                                     (lambda: complete_bipartite(3, 3), 6), (cube_graph, 8),
                                     (petersen_graph, 10), (heawood_graph, 14), (moebius_kantor_graph, 16),
                                     (dodecahedron_graph, 20)])
def test_templates_are_cubic(build, n):
    g = build()
    assert g.n == n and g.is_regular(3) and g.is_connected()


def test_generalized_petersen_matches_named_graphs():
    assert nx_isomorphic(generalized_petersen(5, 2), petersen_graph())
    assert nx_isomorphic(generalized_petersen(4, 1), cube_graph())
    assert not nx_isomorphic(moebius_kantor_graph(), heawood_graph())


def test_distances_and_components():
    g = MultiGraph(5, [(0, 1), (1, 2), (3, 4)])
    assert g.distances_from(0)[:3] == [0, 1, 2]
    assert sorted(map(sorted, g.components())) == [[0, 1, 2], [3, 4]]
    assert not g.is_connected()
