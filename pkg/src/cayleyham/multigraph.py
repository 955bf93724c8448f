"""Loopless undirected multigraphs with stable edge identities.

Edges are numbered in insertion order, so two parallel edges between the
same pair of vertices remain distinguishable.  Everything downstream (hexagon
graphs, smoothed reduction graphs, graph templates) is built on this class.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Iterable, Sequence

from .errors import GraphError


class MultiGraph:
    """A loopless multigraph on vertices ``0..n-1``."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        self.n = n
        self.edges: list[tuple[int, int]] = []
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int) -> int:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
        eid = len(self.edges)
        self.edges.append((u, v))
        self.adj[u].append((v, eid))
        self.adj[v].append((u, eid))
        return eid

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adj[v]]

    def is_regular(self, k: int) -> bool:
        return all(len(a) == k for a in self.adj)

    def multiplicity(self) -> Counter:
        """Counter of unordered vertex pairs -> number of parallel edges."""
        return Counter((min(u, v), max(u, v)) for u, v in self.edges)

    def has_parallel_edges(self) -> bool:
        return any(c > 1 for c in self.multiplicity().values())

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        vs = set(vertices)
        return sum(1 for u, v in self.edges if u in vs and v in vs)

    def induced_edges(self, vertices: Iterable[int]) -> list[int]:
        vs = set(vertices)
        return [i for i, (u, v) in enumerate(self.edges) if u in vs and v in vs]

    def components(self, vertices: Iterable[int] | None = None) -> list[list[int]]:
        """Connected components of the subgraph induced on ``vertices``."""
        allowed = set(range(self.n)) if vertices is None else set(vertices)
        seen: set[int] = set()
        comps = []
        for root in sorted(allowed):
            if root in seen:
                continue
            comp = [root]
            seen.add(root)
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for y, _ in self.adj[x]:
                    if y in allowed and y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.components()) == 1

    def is_forest(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return self.induced_edge_count(vs) == len(vs) - len(self.components(vs))

    def is_tree(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return len(vs) > 0 and len(self.components(vs)) == 1 and self.induced_edge_count(vs) == len(vs) - 1

    def distances_from(self, root: int) -> list[int]:
        dist = [-1] * self.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, _ in self.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def copy(self) -> "MultiGraph":
        return MultiGraph(self.n, self.edges)

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# named graphs

def theta_graph() -> MultiGraph:
    return MultiGraph(2, [(0, 1)] * 3)


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(p: int, q: int) -> MultiGraph:
    return MultiGraph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def cube_graph() -> MultiGraph:
    return MultiGraph(8, [(i, i ^ (1 << k)) for i in range(8) for k in range(3) if i < i ^ (1 << k)])


def generalized_petersen(n: int, k: int) -> MultiGraph:
    """GP(n, k): outer cycle u_i = i, spokes u_i v_i, inner star v_i v_{i+k}."""
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((i, n + i))
    seen = set()
    for i in range(n):
        j = (i + k) % n
        key = (min(i, j), max(i, j))
        if key not in seen:
            seen.add(key)
            edges.append((n + i, n + j))
    return MultiGraph(2 * n, edges)


def lcf_graph(n: int, shifts: Sequence[int], repeats: int) -> MultiGraph:
    """Cubic Hamiltonian graph from LCF notation ``[shifts]^repeats``."""
    edges = {(i, (i + 1) % n) for i in range(n)}
    jumps = list(shifts) * repeats
    for i, d in enumerate(jumps):
        j = (i + d) % n
        edges.add((min(i, j), max(i, j)))
    edges = {(min(u, v), max(u, v)) for u, v in edges}
    return MultiGraph(n, sorted(edges))


def heawood_graph() -> MultiGraph:
    return lcf_graph(14, [5, -5], 7)


def moebius_kantor_graph() -> MultiGraph:
    return generalized_petersen(8, 3)


def petersen_graph() -> MultiGraph:
    return generalized_petersen(5, 2)


def dodecahedron_graph() -> MultiGraph:
    return generalized_petersen(10, 2)
