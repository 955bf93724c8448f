"""The hexagon graph Hex(X), built two independent ways.

``hex_from_faces`` joins two hexagons of the Cayley map when they share an
(a-labelled) edge.  ``hex_from_cosets`` is the orbital graph on left cosets of
H = <ab>, where xH is adjacent to xbH, xb^-1H and xab^2H.  The two are
certified isomorphic by an explicit bijection on every run.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .cayley import A, CayleyGraph, Face
from .errors import InvariantViolation
from .groups import FiniteGroup
from .invariants import is_isomorphic, is_isomorphism
from .multigraph import MultiGraph


@dataclass(eq=False)
class HexGraph:
    graph: MultiGraph
    kind: str  # "faces" | "cosets"
    # per vertex: the hexagon face, or the sorted coset of <ab>
    origin: list = field(default_factory=list)
    # per edge (faces construction only): the shared a-edge of X
    edge_origin: list[tuple[int, int]] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.graph.n


def hex_from_faces(X: CayleyGraph, hexagons: list[Face]) -> HexGraph:
    containing: dict[frozenset, list[int]] = {}
    for i, face in enumerate(hexagons):
        for e in face.edges():
            containing.setdefault(e, []).append(i)
    g = MultiGraph(len(hexagons))
    edge_origin = []
    for u in range(X.n):
        v = X.nbr[u][A]
        if u > v:
            continue
        owners = containing.get(frozenset((u, v)), [])
        if len(owners) != 2 or owners[0] == owners[1]:
            raise InvariantViolation(f"a-edge {u}-{v} lies in hexagons {owners}, expected two distinct")
        g.add_edge(owners[0], owners[1])
        edge_origin.append((u, v))
    if 2 * g.m != X.n or not g.is_regular(3):
        raise InvariantViolation("hexagon graph is not cubic with |G|/2 edges")
    return HexGraph(graph=g, kind="faces", origin=list(hexagons), edge_origin=edge_origin)


def coset_index(G: FiniteGroup) -> tuple[list[int], list[tuple[int, ...]]]:
    """Left cosets xH of H = <ab>: element -> coset id, and the cosets themselves."""
    ab = G.mul(G.a_idx, G.b_idx)
    ab2 = G.mul(ab, ab)
    owner = [-1] * G.order
    cosets: list[tuple[int, ...]] = []
    for x in range(G.order):
        if owner[x] >= 0:
            continue
        members = tuple(sorted({x, G.mul(x, ab), G.mul(x, ab2)}))
        for y in members:
            owner[y] = len(cosets)
        cosets.append(members)
    return owner, cosets


def coset_neighbors(G: FiniteGroup, x: int) -> tuple[int, int, int]:
    """Representatives xb, xb^-1 and xab^2 of the three cosets adjacent to xH."""
    b, binv = G.b_idx, G.binv_idx
    return G.mul(x, b), G.mul(x, binv), G.mul(G.mul(x, G.a_idx), G.mul(b, b))


def hex_from_cosets(G: FiniteGroup) -> HexGraph:
    owner, cosets = coset_index(G)
    arcs: Counter = Counter()
    for i, members in enumerate(cosets):
        for y in coset_neighbors(G, members[0]):
            j = owner[y]
            if j == i:
                raise InvariantViolation(f"coset {i} adjacent to itself")
            arcs[(i, j)] += 1
    g = MultiGraph(len(cosets))
    for (i, j), k in sorted(arcs.items()):
        if arcs[(j, i)] != k:
            raise InvariantViolation(f"coset adjacency not symmetric between {i} and {j}")
        if i < j:
            for _ in range(k):
                g.add_edge(i, j)
    return HexGraph(graph=g, kind="cosets", origin=cosets)


def certify_constructions_agree(h_faces: HexGraph, h_cosets: HexGraph) -> list[int]:
    """Bijection faces -> cosets realizing a multigraph isomorphism.  Raises if none exists."""
    phi = is_isomorphic(h_faces.graph, h_cosets.graph, max_vertices=None)
    if phi is None or not is_isomorphism(h_faces.graph, h_cosets.graph, phi):
        raise InvariantViolation("face and coset constructions of Hex(X) are not isomorphic")
    return phi


@dataclass
class ActionReport:
    order: int
    arcs: int
    preserves_adjacency: bool
    regular_on_arcs: bool

    @property
    def ok(self) -> bool:
        return self.preserves_adjacency and self.regular_on_arcs and self.order == self.arcs

    def to_dict(self) -> dict:
        return {"order": self.order, "arcs": self.arcs, "preserves_adjacency": self.preserves_adjacency,
                "regular_on_arcs": self.regular_on_arcs, "ok": self.ok}


def verify_group_action(h: HexGraph, G: FiniteGroup) -> ActionReport:
    """Left multiplication permutes cosets, preserves adjacency, and is regular on arcs.

    Element g is identified with the arc gH -> gaH; regularity means each
    ordered pair of cosets is hit by exactly as many elements as there are
    parallel edges between them.
    """
    if h.kind != "cosets":
        raise ValueError("the group action is defined on the coset construction")
    owner, cosets = coset_index(G)
    mult = h.graph.multiplicity()
    preserves = True
    for gen in (G.a_idx, G.b_idx):
        image = [owner[G.mul(gen, members[0])] for members in cosets]
        for members, i in zip(cosets, image):
            if any(owner[G.mul(gen, y)] != i for y in members):
                preserves = False
        moved = Counter((min(image[u], image[v]), max(image[u], image[v])) for u, v in h.graph.edges)
        if moved != mult:
            preserves = False
    hits = Counter((owner[g], owner[G.mul(g, G.a_idx)]) for g in range(G.order))
    regular = all(hits[(i, j)] == k and hits[(j, i)] == k for (i, j), k in mult.items()) \
        and sum(hits.values()) == 2 * h.graph.m
    return ActionReport(order=G.order, arcs=2 * h.graph.m, preserves_adjacency=preserves, regular_on_arcs=regular)
