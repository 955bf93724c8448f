"""Graph invariants used to certify the hexagon graph.

Girth, Betti number, cyclic edge connectivity, small-graph isomorphism,
recognition of the six cubic arc-transitive graphs of girth below 6, and the
counting audit for cyclically stable sets.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import GraphError, InvariantViolation
from .multigraph import (MultiGraph, complete_bipartite, complete_graph, cube_graph, dodecahedron_graph,
                         petersen_graph, theta_graph)


# ---------------------------------------------------------------------------
# girth and friends

def girth(g: MultiGraph) -> int:
    """Length of a shortest cycle; 2 when there are parallel edges."""
    if g.has_parallel_edges():
        return 2
    best = None
    for root in range(g.n):
        dist = [-1] * g.n
        via = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] + 1 >= best:
                break
            for y, eid in g.adj[x]:
                if eid == via[x]:
                    continue
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    via[y] = eid
                    queue.append(y)
                else:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best:
                        best = length
    if best is None:
        raise GraphError("graph is a forest; girth undefined")
    return best


def betti_number(g: MultiGraph) -> int:
    return g.m - g.n + len(g.components())


def is_bipartite(g: MultiGraph) -> bool:
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, _ in g.adj[x]:
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
    return True


def _shortest_cycle_through(g: MultiGraph, v: int) -> int | None:
    dist = [-1] * g.n
    via = [-1] * g.n
    branch = [-1] * g.n
    dist[v] = 0
    queue = deque([v])
    best = None
    while queue:
        x = queue.popleft()
        for y, eid in g.adj[x]:
            if eid == via[x]:
                continue
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                via[y] = eid
                branch[y] = eid if x == v else branch[x]
                queue.append(y)
            elif branch[x] != branch[y]:
                length = dist[x] + dist[y] + 1
                if best is None or length < best:
                    best = length
    return best


def _cycles_through(g: MultiGraph, v: int, max_len: int, out: set[frozenset]) -> None:
    """Vertex sets of all cycles of length <= max_len through v."""
    path = [v]
    on_path = {v}

    def extend(x: int, entry_edge: int):
        for y, eid in g.adj[x]:
            if eid == entry_edge:
                continue
            if y == v and len(path) >= 2:
                out.add(frozenset(path))
            elif y not in on_path and len(path) < max_len:
                path.append(y)
                on_path.add(y)
                extend(y, eid)
                path.pop()
                on_path.discard(y)

    extend(v, -1)


def short_cycles(g: MultiGraph, extra: int = 2) -> list[frozenset]:
    """All cycles of length <= girth + extra, plus all shortest cycles through each vertex."""
    limit = girth(g) + extra
    found: set[frozenset] = set()
    for v in range(g.n):
        _cycles_through(g, v, limit, found)
        sv = _shortest_cycle_through(g, v)
        if sv is not None and sv > limit:
            _cycles_through(g, v, sv, found)
    return sorted(found, key=lambda c: (len(c), sorted(c)))


def _min_cut_between(g: MultiGraph, left: frozenset, right: frozenset, limit: int) -> int:
    """Minimum number of edges separating two disjoint vertex sets, capped at ``limit``.

    Unit-capacity augmenting paths on the graph with each side contracted.
    """
    SRC, SNK = g.n, g.n + 1

    def node(x):
        return SRC if x in left else SNK if x in right else x

    # residual capacities keyed by (edge id, direction)
    arcs: dict[int, list[tuple[int, int, int]]] = {}
    cap = {}
    for eid, (u, v) in enumerate(g.edges):
        x, y = node(u), node(v)
        if x == y:
            continue
        arcs.setdefault(x, []).append((y, eid, 0))
        arcs.setdefault(y, []).append((x, eid, 1))
        cap[(eid, 0)] = 1
        cap[(eid, 1)] = 1
    flow = 0
    while flow < limit:
        prev = {SRC: None}
        queue = deque([SRC])
        while queue and SNK not in prev:
            x = queue.popleft()
            for y, eid, d in arcs.get(x, ()):
                if y not in prev and cap[(eid, d)] > 0:
                    prev[y] = (x, eid, d)
                    queue.append(y)
        if SNK not in prev:
            break
        y = SNK
        while prev[y] is not None:
            x, eid, d = prev[y]
            cap[(eid, d)] -= 1
            cap[(eid, 1 - d)] += 1
            y = x
        flow += 1
    return flow


def _require_cubic(g: MultiGraph):
    if not g.is_regular(3):
        raise GraphError("graph is not cubic")
    if not g.is_connected():
        raise GraphError("graph is not connected")


def cyclic_edge_connectivity(g: MultiGraph) -> int:
    """Minimum size of a cycle-separating edge cut, capped at the Betti number.

    Every pair of vertex-disjoint cycles from :func:`short_cycles` is
    contracted to a source and a sink; the smallest min-cut among the pairs is
    the answer.  When no two disjoint cycles exist the Betti number is returned.
    """
    _require_cubic(g)
    best = betti_number(g)
    cycles = short_cycles(g)
    for i, c1 in enumerate(cycles):
        for c2 in cycles[i + 1:]:
            if c1 & c2:
                continue
            best = min(best, _min_cut_between(g, c1, c2, best))
    return best


def _has_cycle_separation(g: MultiGraph, removed: set[int]) -> bool:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges_in = Counter()
    kept = [(u, v) for eid, (u, v) in enumerate(g.edges) if eid not in removed]
    for u, v in kept:
        parent[find(u)] = find(v)
    verts = Counter(find(x) for x in range(g.n))
    for u, _ in kept:
        edges_in[find(u)] += 1
    if len(verts) < 2:
        return False
    return sum(1 for r in verts if edges_in[r] >= verts[r]) >= 2


def cyclic_edge_connectivity_exhaustive(g: MultiGraph) -> int:
    """Reference value by trying every edge subset in increasing size."""
    _require_cubic(g)
    beta = betti_number(g)
    for k in range(1, beta):
        for removed in itertools.combinations(range(g.m), k):
            if _has_cycle_separation(g, set(removed)):
                return k
    return beta


# ---------------------------------------------------------------------------
# isomorphism

def _multiplicities(g: MultiGraph) -> list[Counter]:
    mult = [Counter() for _ in range(g.n)]
    for u, v in g.edges:
        mult[u][v] += 1
        mult[v][u] += 1
    return mult


def _vertex_labels(g: MultiGraph) -> list[tuple]:
    labels = []
    for v in range(g.n):
        dist = g.distances_from(v)
        labels.append((g.degree(v), tuple(sorted(Counter(dist).items()))))
    return labels


def _search_order(g: MultiGraph) -> list[int]:
    order, seen = [], set()
    for root in range(g.n):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(g.neighbors(x)):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return order


DEFAULT_ISO_CAP = 64


def is_isomorphic(g1: MultiGraph, g2: MultiGraph, max_vertices: int | None = DEFAULT_ISO_CAP) -> list[int] | None:
    """An isomorphism g1 -> g2 as a list ``phi[v1] = v2``, or None.

    Backtracking in BFS order; candidates are filtered by degree and
    distance profile, and every partial map must preserve edge
    multiplicities.
    """
    if max_vertices is not None and max(g1.n, g2.n) > max_vertices:
        raise GraphError(f"isomorphism search capped at {max_vertices} vertices")
    if g1.n != g2.n or g1.m != g2.m:
        return None
    if sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return None
    if sorted(g1.multiplicity().values()) != sorted(g2.multiplicity().values()):
        return None
    lab1, lab2 = _vertex_labels(g1), _vertex_labels(g2)
    if sorted(lab1) != sorted(lab2):
        return None
    m1, m2 = _multiplicities(g1), _multiplicities(g2)
    order = _search_order(g1)
    phi = [-1] * g1.n
    back = [-1] * g2.n

    def consistent(v: int, w: int) -> bool:
        for x, k in m1[v].items():
            if phi[x] >= 0 and m2[w][phi[x]] != k:
                return False
        for y, k in m2[w].items():
            if back[y] >= 0 and m1[v][back[y]] != k:
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        anchor = next((x for x in m1[v] if phi[x] >= 0), None)
        pool = sorted(m2[phi[anchor]]) if anchor is not None else range(g2.n)
        for w in pool:
            if back[w] >= 0 or lab2[w] != lab1[v] or not consistent(v, w):
                continue
            phi[v], back[w] = w, v
            if extend(i + 1):
                return True
            phi[v], back[w] = -1, -1
        return False

    return list(phi) if extend(0) else None


def is_isomorphism(g1: MultiGraph, g2: MultiGraph, phi: Sequence[int]) -> bool:
    if g1.n != g2.n or sorted(phi) != list(range(g2.n)):
        return False
    mapped = Counter((min(phi[u], phi[v]), max(phi[u], phi[v])) for u, v in g1.edges)
    return mapped == g2.multiplicity()


# ---------------------------------------------------------------------------
# exceptional graphs

class Exceptional(str, enum.Enum):
    THETA2 = "Theta2"
    K4 = "K4"
    K33 = "K33"
    Q3 = "Q3"
    PETERSEN = "Petersen"
    DODECAHEDRON = "Dodecahedron"
    NONE = "None"


TEMPLATES = {
    Exceptional.THETA2: theta_graph,
    Exceptional.K4: lambda: complete_graph(4),
    Exceptional.K33: lambda: complete_bipartite(3, 3),
    Exceptional.Q3: cube_graph,
    Exceptional.PETERSEN: petersen_graph,
    Exceptional.DODECAHEDRON: dodecahedron_graph,
}

# (order, girth) separates the six templates
_TEMPLATE_KEYS = {
    (2, 2): Exceptional.THETA2,
    (4, 3): Exceptional.K4,
    (6, 4): Exceptional.K33,
    (8, 4): Exceptional.Q3,
    (10, 5): Exceptional.PETERSEN,
    (20, 5): Exceptional.DODECAHEDRON,
}


def recognize_exceptional(g: MultiGraph) -> Exceptional:
    gi = girth(g)
    if gi >= 6:
        return Exceptional.NONE
    label = _TEMPLATE_KEYS.get((g.n, gi))
    if label is None:
        return Exceptional.NONE
    if is_isomorphic(g, TEMPLATES[label]()) is None:
        return Exceptional.NONE
    return label


# ---------------------------------------------------------------------------
# reports

@dataclass(frozen=True)
class InvariantReport:
    n: int
    edges: int
    girth: int
    bipartite: bool
    betti: int
    zeta: int
    exceptional: Exceptional

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": self.edges, "girth": self.girth, "bipartite": self.bipartite,
                "betti": self.betti, "zeta": self.zeta, "exceptional": self.exceptional.value}


def analyze(g: MultiGraph) -> InvariantReport:
    rep = InvariantReport(n=g.n, edges=g.m, girth=girth(g), bipartite=is_bipartite(g), betti=betti_number(g),
                          zeta=cyclic_edge_connectivity(g), exceptional=recognize_exceptional(g))
    if rep.zeta > rep.betti:
        raise InvariantViolation("cyclic connectivity exceeds the Betti number")
    return rep


@dataclass(frozen=True)
class StabilityAudit:
    """Edge counts around a cyclically stable set S of a cubic multigraph.

    ``c`` trees in X[S], ``e`` edges inside the complement, ``f`` edges inside
    S, ``g`` edges across.  For acyclic S: f = |S| - c, g = |S| + 2c and
    e + f + g = 3n/2.
    """

    S: tuple[int, ...]
    n: int
    c: int
    e: int
    f: int
    g: int
    identity_holds: bool
    formula_size: Fraction
    maximum_checked: bool
    bound_holds: bool

    @property
    def size(self) -> int:
        return len(self.S)

    def to_dict(self) -> dict:
        return {"size": self.size, "n": self.n, "c": self.c, "e": self.e, "f": self.f, "g": self.g,
                "identity_holds": self.identity_holds, "formula_size": str(self.formula_size),
                "bound_holds": self.bound_holds}


def jaeger_audit(graph: MultiGraph, S: Iterable[int], maximum: bool = False) -> StabilityAudit:
    """Count c, e, f, g for S and check the size identity.

    With ``maximum=True`` the caller asserts S is a maximum cyclically stable
    set; then |S| = (3n - 2c - 2e)/4 and |S| <= (3n - 2)/4 must hold, and a
    failure raises :class:`InvariantViolation`.
    """
    if not graph.is_regular(3):
        raise GraphError("audit needs a cubic multigraph")
    S = tuple(sorted(set(S)))
    inside = set(S)
    n = graph.n
    c = len(graph.components(S)) if S else 0
    f = e = cross = 0
    for u, v in graph.edges:
        k = (u in inside) + (v in inside)
        if k == 2:
            f += 1
        elif k == 1:
            cross += 1
        else:
            e += 1
    if f != len(S) - c:
        raise InvariantViolation(f"S is not acyclic: {f} edges on {len(S)} vertices in {c} components")
    identity = 2 * (e + 2 * len(S) + c) == 3 * n
    formula = Fraction(3 * n - 2 * c - 2 * e, 4)
    bound = 4 * len(S) <= 3 * n - 2
    if maximum and not (identity and formula == len(S) and bound):
        raise InvariantViolation(f"maximum stable set fails the counting identity: |S|={len(S)}, c={c}, e={e}")
    return StabilityAudit(S=S, n=n, c=c, e=e, f=f, g=cross, identity_holds=identity, formula_size=formula,
                          maximum_checked=maximum, bound_holds=bound)
