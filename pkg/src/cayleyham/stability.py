"""Cyclically stable sets that induce a tree.

For a cubic graph of order n the witnesses sought are

* n = 2 (mod 4): S of size (3n-2)/4 inducing a tree, complement independent;
* n = 0 (mod 4): S of size (3n-4)/4 inducing a tree, complement spanning
  exactly one edge.

The search picks the (small) complement D vertex by vertex in increasing
order, trying "in D" before "in S", so the first witness found has the
lexicographically least complement.
"""

from __future__ import annotations

import itertools
import logging
import sys
import time
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import BudgetExhausted, GraphError, InvariantViolation, NoWitnessFound
from .invariants import cyclic_edge_connectivity, girth, jaeger_audit, recognize_exceptional, Exceptional
from .multigraph import MultiGraph

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8

INDEPENDENT = "Independent"
SINGLE_EDGE = "SingleEdge"


@dataclass
class StableSetSolution:
    S: tuple[int, ...]
    complement: tuple[int, ...]
    complement_kind: str
    single_edge: tuple[int, int] | None = None
    search_stats: dict = field(default_factory=dict)

    def to_dict(self, with_time: bool = False) -> dict:
        stats = {k: v for k, v in self.search_stats.items() if with_time or k != "seconds"}
        return {"S": list(self.S), "complement": list(self.complement), "kind": self.complement_kind,
                "single_edge": list(self.single_edge) if self.single_edge else None, "stats": stats}


# ---------------------------------------------------------------------------
# generic complement search

class _ComplementSearch:
    """Backtracking over complements D of fixed size.

    Constraints: exactly ``internal`` of the ``watched`` edges have both ends
    in D, and the vertices outside D induce a tree.  ``fixed`` pre-assigns
    vertices (True = in S, False = in D).
    """

    def __init__(self, g: MultiGraph, d_size: int, internal: int, watched: set[int] | None = None,
                 fixed: dict[int, bool] | None = None, budget: int = DEFAULT_BUDGET):
        self.g = g
        self.d_size = d_size
        self.internal = internal
        self.watched = set(range(g.m)) if watched is None else set(watched)
        self.budget = budget
        self.nodes = 0
        self.state: list[bool | None] = [None] * g.n  # True: S, False: D
        for v, side in (fixed or {}).items():
            self.state[v] = side
        self.free = [v for v in range(g.n) if self.state[v] is None]
        self.free_after = {v: len(self.free) - i - 1 for i, v in enumerate(self.free)}
        self.d_count = sum(1 for x in self.state if x is False)
        self.inside = 0
        for eid in self.watched:
            u, v = g.edges[eid]
            if self.state[u] is False and self.state[v] is False:
                self.inside += 1
        self.watched_adj = [[(y, e) for y, e in g.adj[v] if e in self.watched] for v in range(g.n)]

    def _s_side_ok(self) -> bool:
        """Decided S vertices induce a forest and fit in one component of V - D."""
        g, state = self.g, self.state
        s_vertices = [v for v in range(g.n) if state[v] is True]
        if not s_vertices:
            return True
        # forest among decided S
        seen: dict[int, int] = {}
        comps = 0
        for root in s_vertices:
            if root in seen:
                continue
            comps += 1
            seen[root] = comps
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for y, _ in g.adj[x]:
                    if state[y] is True and y not in seen:
                        seen[y] = comps
                        queue.append(y)
        edges = sum(1 for u, v in g.edges if state[u] is True and state[v] is True)
        if edges != len(s_vertices) - comps:
            return False
        # one component of the non-D vertices must hold every decided S vertex
        root = s_vertices[0]
        reach = {root}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, _ in g.adj[x]:
                if state[y] is not False and y not in reach:
                    reach.add(y)
                    queue.append(y)
        return all(v in reach for v in s_vertices)

    def _complete_ok(self) -> bool:
        s_vertices = [v for v in range(self.g.n) if self.state[v] is not False]
        return self.inside == self.internal and self.g.is_tree(s_vertices)

    def run(self) -> tuple[int, ...] | None:
        old_limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old_limit, 4 * self.g.n + 200))
        try:
            if self.d_count > self.d_size or self.inside > self.internal or not self._s_side_ok():
                return None
            found = self._extend(0)
        finally:
            sys.setrecursionlimit(old_limit)
        if not found:
            return None
        return tuple(v for v in range(self.g.n) if self.state[v] is False)

    def _extend(self, i: int) -> bool:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(f"search budget of {self.budget} nodes exhausted", stats={"nodes": self.nodes})
        if i == len(self.free):
            return self.d_count == self.d_size and self._complete_ok()
        v = self.free[i]
        remaining = self.free_after[v]
        # v in D first: yields the lexicographically least complement
        if self.d_count < self.d_size:
            added = sum(1 for y, _ in self.watched_adj[v] if self.state[y] is False)
            if self.inside + added <= self.internal:
                self.state[v] = False
                self.d_count += 1
                self.inside += added
                if self._s_side_ok() and self._extend(i + 1):
                    return True
                self.state[v] = None
                self.d_count -= 1
                self.inside -= added
        if self.d_size - self.d_count <= remaining:
            self.state[v] = True
            if self._s_side_ok() and self._extend(i + 1):
                return True
            self.state[v] = None
        return False


def _check_cubic(h: MultiGraph):
    if not h.is_regular(3):
        raise GraphError("graph is not cubic")
    if not h.is_connected():
        raise GraphError("graph is not connected")


def verify_witness(h: MultiGraph, sol: StableSetSolution) -> None:
    """Raise :class:`InvariantViolation` unless ``sol`` is a valid witness for ``h``."""
    n = h.n
    S, D = set(sol.S), set(sol.complement)
    if S & D or len(S | D) != n:
        raise InvariantViolation("S and complement do not partition the vertices")
    if not h.is_tree(sol.S):
        raise InvariantViolation("S does not induce a tree")
    inner = [h.edges[e] for e in h.induced_edges(D)]
    if sol.complement_kind == INDEPENDENT:
        if inner or 4 * len(S) != 3 * n - 2:
            raise InvariantViolation("complement not independent or wrong size")
    elif sol.complement_kind == SINGLE_EDGE:
        if len(inner) != 1 or 4 * len(S) != 3 * n - 4:
            raise InvariantViolation("complement does not span exactly one edge or wrong size")
        if sol.single_edge is None or set(sol.single_edge) != set(inner[0]):
            raise InvariantViolation("recorded single edge disagrees with the complement")
    else:
        raise InvariantViolation(f"unknown complement kind {sol.complement_kind}")
    audit = jaeger_audit(h, sol.S)
    if not audit.identity_holds or audit.c != 1:
        raise InvariantViolation("witness fails the counting identity")


def _solve(h: MultiGraph, d_size: int, internal: int, kind: str, budget: int, method: str) -> StableSetSolution:
    start = time.perf_counter()
    search = _ComplementSearch(h, d_size, internal, budget=budget)
    try:
        D = search.run()
    except BudgetExhausted as exc:
        exc.stats = {"nodes": search.nodes, "seconds": time.perf_counter() - start}
        raise
    stats = {"method": method, "nodes": search.nodes, "seconds": time.perf_counter() - start}
    if D is None:
        raise NoWitnessFound(f"no {kind} witness exists on this graph (search exhausted after {search.nodes} nodes)")
    S = tuple(v for v in range(h.n) if v not in set(D))
    single = None
    if internal:
        (u, v), = [h.edges[e] for e in h.induced_edges(D)]
        single = (min(u, v), max(u, v))
    sol = StableSetSolution(S=S, complement=D, complement_kind=kind, single_edge=single, search_stats=stats)
    verify_witness(h, sol)
    return sol


def solve_mod2(h: MultiGraph, budget: int = DEFAULT_BUDGET, check_precondition: bool = True) -> StableSetSolution:
    """Tree on (3n-2)/4 vertices with independent complement, for n = 2 (mod 4)."""
    _check_cubic(h)
    if h.n % 4 != 2:
        raise GraphError(f"solve_mod2 needs n = 2 (mod 4), got n = {h.n}")
    if check_precondition and recognize_exceptional(h) is not Exceptional.THETA2:
        zeta = cyclic_edge_connectivity(h)
        if zeta < 4:
            raise GraphError(f"graph is only cyclically {zeta}-edge-connected; 4 required")
    return _solve(h, (h.n + 2) // 4, 0, INDEPENDENT, budget, "direct")


def solve_mod0(h: MultiGraph, budget: int = DEFAULT_BUDGET) -> StableSetSolution:
    """Tree on (3n-4)/4 vertices whose complement spans a single edge, for n = 0 (mod 4)."""
    _check_cubic(h)
    if h.n % 4 != 0:
        raise GraphError(f"solve_mod0 needs n = 0 (mod 4), got n = {h.n}")
    return _solve(h, (h.n + 4) // 4, 1, SINGLE_EDGE, budget, "direct")


# ---------------------------------------------------------------------------
# reduction to the n = 2 (mod 4) case

@dataclass
class _Reduced:
    graph: MultiGraph
    kept: list[int]             # reduced vertex -> original vertex
    smoothed: tuple[int, ...]   # u1, u2, v1, v2


def reduce_at_edge(h: MultiGraph, u: int, v: int) -> _Reduced | None:
    """Delete adjacent u, v and smooth their four other neighbours away.

    Returns None when the local structure does not allow it (parallel edges,
    shared neighbours, or smoothing that would close a loop).
    """
    nu = [y for y in h.neighbors(u) if y != v]
    nv = [y for y in h.neighbors(v) if y != u]
    smoothed = tuple(nu + nv)
    if len(nu) != 2 or len(nv) != 2 or len(set(smoothed)) != 4 or {u, v} & set(smoothed):
        return None
    gone = {u, v}
    smooth_set = set(smoothed)
    kept = [x for x in range(h.n) if x not in gone and x not in smooth_set]
    index = {x: i for i, x in enumerate(kept)}
    edges = []
    for x, y in h.edges:
        if x in index and y in index:
            edges.append((index[x], index[y]))
    # each chain kept - smoothed... - kept becomes one edge
    visited: set[int] = set()
    for w in smoothed:
        if w in visited:
            continue
        nbrs = [y for y in h.neighbors(w) if y not in gone]
        if len(nbrs) != 2:
            return None
        ends = []
        chain = {w}
        for first in nbrs:
            prev, cur = w, first
            while cur in smooth_set:
                if cur in chain:
                    return None  # a cycle made only of smoothed vertices
                chain.add(cur)
                step = [y for y in h.neighbors(cur) if y not in gone and y != prev]
                if len(step) != 1:
                    return None
                prev, cur = cur, step[0]
            ends.append(cur)
        visited |= chain
        if ends[0] == ends[1]:
            return None
        edges.append((index[ends[0]], index[ends[1]]))
    g = MultiGraph(len(kept), edges)
    if not g.is_regular(3) or not g.is_connected():
        return None
    return _Reduced(graph=g, kept=kept, smoothed=smoothed)


def solve_mod0_via_reduction(h: MultiGraph, budget: int = DEFAULT_BUDGET,
                             audit_connectivity: bool = True) -> StableSetSolution:
    """Solve n = 0 (mod 4) through the n - 6 = 2 (mod 4) case.

    For each edge uv (in sorted order) the graph is reduced at uv, the
    reduced graph is solved with :func:`solve_mod2`, and the tree R is lifted
    to S = R + {u1, u2, v1, v2}.  The first lift that verifies is returned;
    if none does, the direct search is used instead.
    """
    _check_cubic(h)
    if h.n % 4 != 0:
        raise GraphError(f"n = {h.n} is not 0 (mod 4)")
    start = time.perf_counter()
    g = girth(h) if h.n > 2 else 2
    if g < 6:
        log.info("girth %d < 6: reduction is not guaranteed, trying anyway", g)
    tried = 0
    nodes = 0
    for u, v in sorted({(min(x, y), max(x, y)) for x, y in h.edges}):
        red = reduce_at_edge(h, u, v)
        tried += 1
        if red is None or red.graph.n % 4 != 2:
            continue
        zeta = cyclic_edge_connectivity(red.graph) if audit_connectivity else None
        try:
            R = solve_mod2(red.graph, budget=budget, check_precondition=False)
        except (NoWitnessFound, BudgetExhausted) as exc:
            log.debug("edge %d-%d: reduced graph has no witness (%s)", u, v, exc)
            continue
        nodes += R.search_stats.get("nodes", 0)
        S = tuple(sorted({red.kept[x] for x in R.S} | set(red.smoothed)))
        D = tuple(x for x in range(h.n) if x not in set(S))
        sol = StableSetSolution(S=S, complement=D, complement_kind=SINGLE_EDGE, single_edge=(u, v),
                                search_stats={"method": "reduction", "edge": [u, v], "edges_tried": tried,
                                              "reduced_zeta": zeta, "nodes": nodes,
                                              "seconds": time.perf_counter() - start})
        try:
            verify_witness(h, sol)
        except InvariantViolation as exc:
            log.debug("edge %d-%d: lift failed verification (%s)", u, v, exc)
            continue
        return sol
    log.warning("reduction failed on every edge; falling back to direct search")
    sol = solve_mod0(h, budget=budget)
    sol.search_stats["method"] = "direct-fallback"
    sol.search_stats["edges_tried"] = tried
    return sol


# ---------------------------------------------------------------------------
# exhaustive oracle

@dataclass
class BruteForceResult:
    max_size: int
    witness: tuple[int, ...]
    complement: tuple[int, ...]
    census: Counter

    def kinds(self) -> set[str]:
        return set(self.census)


def _is_forest(n: int, edges: Sequence[tuple[int, int]], keep: set[int]) -> tuple[bool, int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = len(keep)
    for u, v in edges:
        if u in keep and v in keep:
            ru, rv = find(u), find(v)
            if ru == rv:
                return False, 0
            parent[ru] = rv
            comps -= 1
    return True, comps


BRUTE_FORCE_CAP = 24


def brute_force_stability(h: MultiGraph, max_n: int = BRUTE_FORCE_CAP) -> BruteForceResult:
    """Exact cyclic stability number by trying complements in increasing size.

    The census classifies every minimum complement by (components of X[S],
    edges inside the complement).
    """
    if h.n > max_n:
        raise GraphError(f"brute force capped at {max_n} vertices")
    verts = range(h.n)
    for d in range(h.n + 1):
        census: Counter = Counter()
        first = None
        for D in itertools.combinations(verts, d):
            keep = set(verts) - set(D)
            ok, comps = _is_forest(h.n, h.edges, keep)
            if not ok:
                continue
            dset = set(D)
            e = sum(1 for x, y in h.edges if x in dset and y in dset)
            if comps == 1 and e == 0:
                census["tree+independent"] += 1
            elif comps == 1 and e == 1:
                census["tree+single-edge"] += 1
            elif comps == 2 and e == 0:
                census["two-trees+independent"] += 1
            else:
                census[f"c={comps},e={e}"] += 1
            if first is None:
                first = D
        if first is not None:
            S = tuple(v for v in verts if v not in set(first))
            return BruteForceResult(max_size=len(S), witness=S, complement=tuple(first), census=census)
    raise AssertionError("unreachable: the empty set is always cyclically stable")
