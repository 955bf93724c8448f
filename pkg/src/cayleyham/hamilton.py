"""From a stable-set witness to verified Hamilton cycles and paths.

A tree of hexagons in the Cayley map is a disk whose boundary is a simple
cycle; with k hexagons the boundary has 4k + 2 vertices.  The boundary is
computed as the mod-2 sum of the faces' edge sets and checked to be a single
simple cycle rather than assumed to be one.
"""

from __future__ import annotations

import itertools
import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .cayley import CayleyGraph, CayleyMapSummary, Face, build_cayley, enumerate_hexagons, enumerate_sgons, \
    map_summary
from .errors import BudgetExhausted, InvariantViolation
from .groups import FiniteGroup, ValidationReport, validate_233
from .hexgraph import HexGraph, certify_constructions_agree, hex_from_cosets, hex_from_faces, verify_group_action, \
    ActionReport
from .invariants import Exceptional, InvariantReport, analyze, jaeger_audit
from .multigraph import MultiGraph
from .stability import DEFAULT_BUDGET, StableSetSolution, _ComplementSearch, solve_mod0, \
    solve_mod0_via_reduction, solve_mod2

log = logging.getLogger(__name__)

CYCLE, NEAR_CYCLE, PATH = "Cycle", "NearCycle2", "Path"


@dataclass
class FaceTree:
    faces: tuple[Face, ...]
    tree_edges: list[tuple[int, int]]  # indices into ``faces``

    @property
    def num_hexagons(self) -> int:
        return sum(1 for f in self.faces if f.kind == "hexagon")

    @property
    def num_sgons(self) -> int:
        return sum(1 for f in self.faces if f.kind == "sgon")


@dataclass
class BoundaryCycle:
    edges: frozenset
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass
class HamiltonCertificate:
    kind: str
    vertices: tuple[int, ...]
    missed: tuple[int, int] | None = None

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        pairs = list(zip(vs, vs[1:]))
        if self.kind in (CYCLE, NEAR_CYCLE) and len(vs) > 2:
            pairs.append((vs[-1], vs[0]))
        return pairs

    def to_dict(self, words: Sequence[str] | None = None) -> dict:
        name = (lambda v: words[v]) if words is not None else (lambda v: v)
        out = {"kind": self.kind, "length": len(self.vertices), "vertices": [name(v) for v in self.vertices]}
        if self.missed is not None:
            out["missed"] = [name(v) for v in self.missed]
        return out


# ---------------------------------------------------------------------------
# faces -> boundary

def tree_from_faces(faces: Sequence[Face]) -> FaceTree:
    """Face adjacency (shared X-edges) restricted to ``faces``; must be a tree."""
    owner: dict[frozenset, list[int]] = {}
    for i, f in enumerate(faces):
        for e in f.edges():
            owner.setdefault(e, []).append(i)
    g = MultiGraph(len(faces))
    tree_edges = []
    for e, fs in sorted(owner.items(), key=lambda kv: sorted(kv[0])):
        if len(fs) == 2:
            g.add_edge(fs[0], fs[1])
            tree_edges.append((min(fs), max(fs)))
        elif len(fs) > 2:
            raise InvariantViolation(f"edge {sorted(e)} lies in {len(fs)} faces")
    if not g.is_tree(range(len(faces))):
        raise InvariantViolation("faces do not form a tree under edge adjacency")
    return FaceTree(faces=tuple(faces), tree_edges=sorted(tree_edges))


def face_tree_from_witness(sol: StableSetSolution, hexagons: Sequence[Face], bij: Sequence[int]) -> FaceTree:
    """The hexagons named by a witness on the coset graph.

    ``bij[face index] = coset index`` is the certified bijection.
    """
    face_of = {c: f for f, c in enumerate(bij)}
    chosen = sorted(face_of[c] for c in sol.S)
    return tree_from_faces([hexagons[i] for i in chosen])


def _canonical_cycle_order(adj: dict[int, list[int]]) -> tuple[int, ...]:
    start = min(adj)
    seq = [start, min(adj[start])]
    while True:
        a, b = adj[seq[-1]]
        nxt = a if a != seq[-2] else b
        if nxt == start:
            break
        seq.append(nxt)
    return tuple(seq)


def boundary(tree: FaceTree) -> BoundaryCycle:
    """Mod-2 sum of the face boundaries, checked to be one simple cycle."""
    count: Counter = Counter()
    for f in tree.faces:
        count.update(f.edges())
    edges = frozenset(e for e, k in count.items() if k % 2)
    adj: dict[int, list[int]] = {}
    for e in edges:
        u, v = tuple(e)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if not adj or any(len(ns) != 2 for ns in adj.values()):
        raise InvariantViolation("boundary is not 2-regular")
    order = _canonical_cycle_order(adj)
    if len(order) != len(adj):
        raise InvariantViolation("boundary splits into more than one cycle")
    if tree.num_sgons == 0 and len(order) != 4 * len(tree.faces) + 2:
        raise InvariantViolation(f"boundary of {len(tree.faces)} hexagons has length {len(order)}")
    return BoundaryCycle(edges=edges, vertices=order)


def hamilton_path_from_near_cycle(X: CayleyGraph, cycle: BoundaryCycle, u: int, v: int) -> HamiltonCertificate:
    """Path v, u, x, then once around the cycle starting at x.

    x is the least neighbour of u on the cycle.
    """
    on_cycle = set(cycle.vertices)
    if u in on_cycle or v in on_cycle or not X.adjacent(u, v):
        raise InvariantViolation("missed vertices must be adjacent and off the cycle")
    choices = sorted(y for y in X.neighbors(u) if y in on_cycle)
    if not choices:
        raise InvariantViolation(f"vertex {u} has no neighbour on the cycle")
    x = choices[0]
    i = cycle.vertices.index(x)
    around = cycle.vertices[i:] + cycle.vertices[:i]
    return HamiltonCertificate(PATH, (v, u) + tuple(around))


# ---------------------------------------------------------------------------
# verification

@dataclass
class CertificateReport:
    ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def adjacency_sets(X: CayleyGraph) -> list[set[int]]:
    return [set(X.neighbors(v)) for v in range(X.n)]


def verify_certificate(adjacency: CayleyGraph | Sequence[set[int]], cert: HamiltonCertificate) -> CertificateReport:
    """Re-check a certificate against nothing but the adjacency of X."""
    adj = adjacency_sets(adjacency) if isinstance(adjacency, CayleyGraph) else list(adjacency)
    n = len(adj)
    vs = list(cert.vertices)
    failures = []
    if any(not (0 <= v < n) for v in vs):
        return CertificateReport(False, ["vertex out of range"])
    if len(set(vs)) != len(vs):
        failures.append("distinctness: a vertex repeats")
    bad = [(x, y) for x, y in zip(vs, vs[1:]) if y not in adj[x]]
    if bad:
        failures.append(f"adjacency: {len(bad)} consecutive pairs are not edges, first {bad[0]}")
    if cert.kind in (CYCLE, NEAR_CYCLE):
        if len(vs) < 3 or vs[0] not in adj[vs[-1]]:
            failures.append("closure: last vertex not adjacent to first")
    if cert.kind == CYCLE:
        if len(vs) != n or set(vs) != set(range(n)):
            failures.append(f"coverage: cycle has {len(set(vs))} of {n} vertices")
    elif cert.kind == NEAR_CYCLE:
        if len(vs) != n - 2:
            failures.append(f"length: near-cycle has {len(vs)} vertices, expected {n - 2}")
        if cert.missed is None or len(set(cert.missed)) != 2:
            failures.append("missed pair: absent")
        else:
            u, v = cert.missed
            if not (0 <= u < n and 0 <= v < n):
                failures.append("missed pair: out of range")
            else:
                if v not in adj[u]:
                    failures.append("missed-pair adjacency: u and v are not adjacent")
                if set(vs) | {u, v} != set(range(n)) or {u, v} & set(vs):
                    failures.append("coverage: cycle and missed pair do not partition the vertices")
                on = set(vs)
                if not (adj[u] & on and adj[v] & on):
                    failures.append("missed pair: not adjacent to the cycle")
    elif cert.kind == PATH:
        if len(vs) != n or set(vs) != set(range(n)):
            failures.append(f"coverage: path has {len(set(vs))} of {n} vertices")
        if n > 1 and vs and vs[0] == vs[-1]:
            failures.append("endpoints coincide")
    else:
        failures.append(f"unknown certificate kind {cert.kind!r}")
    return CertificateReport(not failures, failures)


# ---------------------------------------------------------------------------
# Hamilton trees of faces with s-gons

@dataclass
class AugmentedResult:
    certificate: HamiltonCertificate
    tree: FaceTree
    sgons_used: int
    hexagons_used: int
    nodes: int


def _face_dual(X: CayleyGraph, hexagons: Sequence[Face], sgons: Sequence[Face]):
    """Dual multigraph on faces (hexagons first) plus, per a-edge dual edge, its X endpoints."""
    owner: dict[frozenset, list[int]] = {}
    faces = list(hexagons) + list(sgons)
    for i, f in enumerate(faces):
        for e in f.edges():
            owner.setdefault(e, []).append(i)
    g = MultiGraph(len(faces))
    a_edges: dict[int, tuple[int, int]] = {}
    for u, v, label in X.edges():
        fs = owner[frozenset((u, v))]
        if len(fs) != 2:
            raise InvariantViolation(f"edge {u}-{v} not on exactly two faces")
        eid = g.add_edge(fs[0], fs[1])
        if label == "a":
            a_edges[eid] = (u, v)
    return g, a_edges


def _augment_worker(args):
    n_faces, edges, d_size, watched, fixed, budget = args
    g = MultiGraph(n_faces, edges)
    search = _ComplementSearch(g, d_size, 0, watched=watched, fixed=fixed, budget=budget)
    try:
        D = search.run()
    except BudgetExhausted:
        return None, search.nodes, True
    return D, search.nodes, False


def hamilton_tree_of_faces_search(X: CayleyGraph, hexagons: Sequence[Face], sgons: Sequence[Face],
                                  budget: int = DEFAULT_BUDGET, max_sgons: int = 4,
                                  prefer: Sequence[int] = (), threads: int = 1) -> AugmentedResult | None:
    """Look for a tree of hexagons and s-gons whose boundary passes through every vertex.

    The number of s-gons k is tried in increasing order; the hexagon count is
    then forced by (4 * hexagons + 2) + (s - 2) * k = |G|.  s-gons through the
    vertices in ``prefer`` (the vertices a hexagon tree missed) are tried
    first.  Returns None when nothing is found within ``budget`` nodes; that
    is not a statement about existence.
    """
    n, s = X.n, X.s
    H, K = len(hexagons), len(sgons)
    dual, a_edges = _face_dual(X, hexagons, sgons)
    sgon_of = {}
    for j, f in enumerate(sgons):
        for v in f.vertices:
            sgon_of[v] = H + j
    preferred = {sgon_of[v] for v in prefer}
    sgon_ids = sorted(range(H, H + K), key=lambda j: (j not in preferred, j))
    spent = 0
    for k in range(1, max_sgons + 1):
        rest = n - 2 - (s - 2) * k
        if rest < 0:
            break
        if rest % 4:
            continue
        k_h = rest // 4
        if k_h > H or k > K:
            continue
        jobs = []
        for combo in itertools.combinations(sgon_ids, k):
            chosen = set(combo)
            fixed = {j: (j in chosen) for j in range(H, H + K)}
            watched = {eid for eid, (u, v) in a_edges.items()
                       if sgon_of[u] not in chosen or sgon_of[v] not in chosen}
            d_size = (H - k_h) + (K - k)
            jobs.append((combo, (dual.n, list(dual.edges), d_size, watched, fixed, max(budget - spent, 1))))
        if threads > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(_augment_worker, [job for _, job in jobs]))
        else:
            results = None
        for idx, (combo, job) in enumerate(jobs):
            D, nodes, exhausted = results[idx] if results is not None else _augment_worker(job)
            spent += nodes
            if D is None:
                if exhausted or spent >= budget:
                    log.info("s-gon search budget exhausted after %d nodes", spent)
                    return None
                continue
            chosen_faces = [f for f in range(dual.n) if f not in set(D)]
            faces = [hexagons[f] if f < H else sgons[f - H] for f in chosen_faces]
            tree = tree_from_faces(faces)
            cyc = boundary(tree)
            cert = HamiltonCertificate(CYCLE, cyc.vertices)
            report = verify_certificate(X, cert)
            if not report:
                raise InvariantViolation(f"face tree boundary is not a Hamilton cycle: {report.failures}")
            return AugmentedResult(certificate=cert, tree=tree, sgons_used=k, hexagons_used=k_h, nodes=spent)
    return None


# ---------------------------------------------------------------------------
# the whole construction

@dataclass(eq=False)
class TheoremResult:
    group: FiniteGroup
    s: int
    validation: ValidationReport
    X: CayleyGraph
    summary: CayleyMapSummary
    hexagons: list[Face]
    sgons: list[Face]
    hex_faces: HexGraph
    hex_cosets: HexGraph
    bijection: list[int]
    action: ActionReport
    invariants: InvariantReport
    witness: StableSetSolution
    tree: FaceTree
    boundary: BoundaryCycle
    certificate: HamiltonCertificate
    path: HamiltonCertificate | None = None
    augmented: AugmentedResult | None = None
    timings: dict = field(default_factory=dict)

    def certificates(self) -> list[HamiltonCertificate]:
        out = [self.certificate]
        if self.path is not None:
            out.append(self.path)
        if self.augmented is not None:
            out.append(self.augmented.certificate)
        return out


def solve_theorem(G: FiniteGroup, s: int, budget: int = DEFAULT_BUDGET, method: str = "auto",
                  augment: bool = False, threads: int = 1) -> TheoremResult:
    """Hamilton cycle (|G| = 2 mod 4) or (|G|-2)-cycle plus Hamilton path (|G| = 0 mod 4).

    ``method`` picks the n = 0 (mod 4) solver: "direct", "reduction", or
    "auto" (reduction when the hexagon graph has girth >= 6).
    """
    clock = {}
    t0 = time.perf_counter()
    validation = validate_233(G, s).raise_if_invalid()
    X = build_cayley(G, s)
    summary = map_summary(G.order, s)
    hexagons = enumerate_hexagons(X)
    sgons = enumerate_sgons(X)
    h_faces = hex_from_faces(X, hexagons)
    h_cosets = hex_from_cosets(G)
    phi = certify_constructions_agree(h_faces, h_cosets)
    action = verify_group_action(h_cosets, G)
    if not action.ok:
        raise InvariantViolation("G does not act 1-regularly on the coset graph")
    inv = analyze(h_cosets.graph)
    clock["structure"] = time.perf_counter() - t0

    t1 = time.perf_counter()
    h = h_cosets.graph
    if h.n % 4 == 2:
        witness = solve_mod2(h, budget=budget, check_precondition=inv.exceptional is not Exceptional.THETA2)
    else:
        use_reduction = method == "reduction" or (method == "auto" and inv.girth >= 6)
        witness = solve_mod0_via_reduction(h, budget=budget) if use_reduction else solve_mod0(h, budget=budget)
    audit = jaeger_audit(h, witness.S, maximum=True)
    if audit.c != 1:
        raise InvariantViolation("witness is not a single tree")
    clock["stability"] = time.perf_counter() - t1

    tree = face_tree_from_witness(witness, hexagons, phi)
    cyc = boundary(tree)
    covered = set(cyc.vertices)
    if h.n % 4 == 2:
        if len(covered) != X.n:
            raise InvariantViolation("independent complement but boundary misses vertices")
        cert = HamiltonCertificate(CYCLE, cyc.vertices)
        path = None
    else:
        face_of = {c: f for f, c in enumerate(phi)}
        f1, f2 = sorted(face_of[c] for c in witness.single_edge)
        shared = [h_faces.edge_origin[e] for e, (x, y) in enumerate(h_faces.graph.edges) if {x, y} == {f1, f2}]
        if len(shared) != 1:
            raise InvariantViolation("complement hexagons do not share exactly one a-edge")
        u, v = sorted(shared[0])
        missed = set(range(X.n)) - covered
        if missed != {u, v}:
            raise InvariantViolation(f"boundary misses {sorted(missed)}, expected the shared a-edge {u}-{v}")
        cert = HamiltonCertificate(NEAR_CYCLE, cyc.vertices, missed=(u, v))
        path = hamilton_path_from_near_cycle(X, cyc, u, v)

    augmented = None
    if augment and h.n % 4 == 0:
        t2 = time.perf_counter()
        augmented = hamilton_tree_of_faces_search(X, hexagons, sgons, budget=budget,
                                                  prefer=cert.missed or (), threads=threads)
        clock["augment"] = time.perf_counter() - t2
    result = TheoremResult(group=G, s=s, validation=validation, X=X, summary=summary, hexagons=hexagons,
                           sgons=sgons, hex_faces=h_faces, hex_cosets=h_cosets, bijection=phi, action=action,
                           invariants=inv, witness=witness, tree=tree, boundary=cyc, certificate=cert, path=path,
                           augmented=augmented, timings=clock)
    for c in result.certificates():
        report = verify_certificate(X, c)
        if not report:
            raise InvariantViolation(f"{c.kind} certificate failed verification: {report.failures}")
    return result
