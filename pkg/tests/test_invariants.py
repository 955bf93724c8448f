import networkx as nx
import pytest

from cayleyham.errors import InvariantViolation
from cayleyham.invariants import (Exceptional, analyze, betti_number, cyclic_edge_connectivity,
                                  cyclic_edge_connectivity_exhaustive, girth, is_bipartite, is_isomorphic,
                                  is_isomorphism, jaeger_audit, recognize_exceptional)
from cayleyham.multigraph import (MultiGraph, complete_bipartite, complete_graph, cube_graph, dodecahedron_graph,
                                  generalized_petersen, heawood_graph, moebius_kantor_graph, petersen_graph,
                                  theta_graph)

from oracles import nx_isomorphic, to_networkx

GRAPHS = {
    "theta": theta_graph, "k4": lambda: complete_graph(4), "k33": lambda: complete_bipartite(3, 3),
    "q3": cube_graph, "petersen": petersen_graph, "heawood": heawood_graph, "mk": moebius_kantor_graph,
    "dodecahedron": dodecahedron_graph,
}
# (girth, zeta); zeta frozen from cyclic_edge_connectivity_exhaustive
EXPECTED = {"theta": (2, 2), "k4": (3, 3), "k33": (4, 4), "q3": (4, 4), "petersen": (5, 5), "heawood": (6, 6),
            "mk": (6, 6), "dodecahedron": (5, 5)}


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_girth_and_zeta(name):
    g = GRAPHS[name]()
    assert (girth(g), cyclic_edge_connectivity(g)) == EXPECTED[name]


@pytest.mark.parametrize("name", ["theta", "k4", "k33", "q3", "petersen", "heawood"])
def test_zeta_matches_exhaustive_oracle(name):
    g = GRAPHS[name]()
    assert cyclic_edge_connectivity(g) == cyclic_edge_connectivity_exhaustive(g)


@pytest.mark.parametrize("name", ["k4", "k33", "q3", "petersen", "heawood", "mk", "dodecahedron"])
def test_girth_matches_networkx(name):
    g = GRAPHS[name]()
    assert girth(g) == nx.girth(nx.Graph(to_networkx(g)))


def test_zeta_on_non_vertex_transitive_graph():
    # two K4-minus-an-edge blocks joined by two edges: a 2-edge cut separates cycles
    g = MultiGraph(8, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (5, 7), (6, 7),
                       (0, 4), (3, 7)])
    assert cyclic_edge_connectivity(g) == 2 == cyclic_edge_connectivity_exhaustive(g)
    assert girth(g) == 3


def test_betti_and_bipartite():
    assert betti_number(theta_graph()) == 2
    assert betti_number(complete_graph(4)) == 3
    assert is_bipartite(cube_graph()) and not is_bipartite(petersen_graph())


@pytest.mark.parametrize("a,b", [("q3", "q3"), ("mk", "mk"), ("dodecahedron", "dodecahedron")])
def test_isomorphism_finds_verified_map(a, b):
    g1 = GRAPHS[a]()
    g2 = GRAPHS[b]()
    # relabel g2 so the identity map is not the answer
    perm = list(reversed(range(g2.n)))
    g2 = MultiGraph(g2.n, [(perm[u], perm[v]) for u, v in g2.edges])
    phi = is_isomorphic(g1, g2)
    assert phi is not None and is_isomorphism(g1, g2, phi)


@pytest.mark.parametrize("a,b", [("mk", "heawood"), ("petersen", "q3"), ("dodecahedron", "mk")])
def test_isomorphism_rejects(a, b):
    g1, g2 = GRAPHS[a](), GRAPHS[b]()
    assert is_isomorphic(g1, g2) is None
    assert nx_isomorphic(g1, g2) is False


def test_isomorphism_distinguishes_gp_graphs_with_equal_profiles():
    # GP(8,3) and GP(8,1) share order and degree; only the former is Moebius-Kantor
    assert is_isomorphic(generalized_petersen(8, 3), moebius_kantor_graph()) is not None
    assert is_isomorphic(generalized_petersen(8, 1), moebius_kantor_graph()) is None


def test_isomorphism_respects_multiplicity():
    g1 = MultiGraph(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (0, 3)])
    g2 = MultiGraph(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)])
    g3 = MultiGraph(4, [(0, 1), (1, 2), (1, 2), (2, 3), (3, 0), (3, 0)])
    assert is_isomorphic(g1, g2) is not None
    assert is_isomorphic(g1, g3) is not None
    g4 = MultiGraph(4, [(0, 1), (0, 1), (0, 1), (2, 3), (2, 3), (2, 3)])
    assert is_isomorphic(g1, g4) is None


@pytest.mark.parametrize("name,label", [("theta", Exceptional.THETA2), ("k4", Exceptional.K4),
                                        ("k33", Exceptional.K33), ("q3", Exceptional.Q3),
                                        ("petersen", Exceptional.PETERSEN),
                                        ("dodecahedron", Exceptional.DODECAHEDRON),
                                        ("mk", Exceptional.NONE), ("heawood", Exceptional.NONE)])
def test_recognize_exceptional(name, label):
    assert recognize_exceptional(GRAPHS[name]()) is label


def test_analyze_report():
    rep = analyze(moebius_kantor_graph())
    assert rep.to_dict() == {"n": 16, "edges": 24, "girth": 6, "bipartite": True, "betti": 9, "zeta": 6,
                             "exceptional": "None"}


def test_jaeger_identity_holds_for_any_acyclic_set():
    g = petersen_graph()
    for S in ([0], [0, 1, 2], [0, 1, 2, 3, 4, 5, 7]):
        if g.is_forest(S):
            audit = jaeger_audit(g, S)
            assert audit.identity_holds
            assert audit.e + 2 * audit.size + audit.c == 3 * g.n // 2


def test_jaeger_audit_rejects_cycles():
    with pytest.raises(InvariantViolation):
        jaeger_audit(complete_graph(4), [0, 1, 2])


def test_jaeger_audit_maximum_on_brute_force_witness():
    from cayleyham.stability import brute_force_stability
    g = cube_graph()
    best = brute_force_stability(g)
    audit = jaeger_audit(g, best.witness, maximum=True)
    assert audit.formula_size == audit.size == 5 and audit.bound_holds
