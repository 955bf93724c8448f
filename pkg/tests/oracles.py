"""Independent reference computations used only by the tests."""

from __future__ import annotations

import itertools

import networkx as nx

from cayleyham.multigraph import MultiGraph


def to_networkx(g: MultiGraph) -> nx.MultiGraph:
    out = nx.MultiGraph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


def nx_isomorphic(g1: MultiGraph, g2: MultiGraph) -> bool:
    return nx.is_isomorphic(to_networkx(g1), to_networkx(g2))


def hamilton_cycles(n: int, adjacent) -> set[frozenset]:
    """Every Hamilton cycle as an edge set, by trying all orderings that start at 0."""
    found = set()
    for rest in itertools.permutations(range(1, n)):
        seq = (0,) + rest
        if all(adjacent(seq[i], seq[(i + 1) % n]) for i in range(n)):
            found.add(frozenset(frozenset((seq[i], seq[(i + 1) % n])) for i in range(n)))
    return found


def faces_by_walking(G, s: int):
    """Hexagons and s-gons as vertex sets, traced straight from the group table."""
    a, b = G.a_idx, G.b_idx
    hexes, sgons = set(), set()
    for g in range(G.order):
        walk, x = [], g
        for step in range(6):
            walk.append(x)
            x = G.mul(x, a if step % 2 == 0 else b)
        hexes.add(frozenset(walk))
        walk, x = [], g
        for _ in range(s):
            walk.append(x)
            x = G.mul(x, b)
        sgons.add(frozenset(walk))
    return hexes, sgons
