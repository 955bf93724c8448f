"""The cubic Cayley graph Cay(G, {a, b, b^-1}) and the faces of its Cayley map.

Using the same rotation (b, a, b^-1) at every vertex yields a map whose faces
are the hexagons traced by (ab)^3 and the s-gons traced by b^s.  The
embedding itself is never built; the two face families are all that the
rest of the pipeline needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation
from .groups import FiniteGroup, validate_233

A, B, BINV = "A", "B", "Binv"


@dataclass(eq=False)
class CayleyGraph:
    """Vertex g is adjacent to ga (label A), gb (label B) and gb^-1 (label Binv)."""

    group: FiniteGroup
    s: int
    nbr: list[dict[str, int]]

    @property
    def n(self) -> int:
        return len(self.nbr)

    def neighbors(self, v: int) -> list[int]:
        d = self.nbr[v]
        return [d[A], d[B], d[BINV]]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.nbr[u].values()

    def edges(self) -> list[tuple[int, int, str]]:
        """Each edge once: A-edges as (g, ga) with g < ga, B-edges as (g, gb)."""
        out = []
        for g, d in enumerate(self.nbr):
            if g < d[A]:
                out.append((g, d[A], "a"))
            out.append((g, d[B], "b"))
        return out

    def edge_set(self) -> set[frozenset]:
        return {frozenset((u, v)) for u, v, _ in self.edges()}

    def word(self, v: int) -> str:
        return self.group.element_words[v]


def build_cayley(G: FiniteGroup, s: int) -> CayleyGraph:
    validate_233(G, s).raise_if_invalid()
    a, b, binv = G.a_idx, G.b_idx, G.binv_idx
    nbr = [{A: G.mul(g, a), B: G.mul(g, b), BINV: G.mul(g, binv)} for g in range(G.order)]
    return CayleyGraph(group=G, s=s, nbr=nbr)


def _canonical_cycle(seq) -> tuple[int, ...]:
    """Least rotation over both traversal directions."""
    seq = list(seq)
    best = None
    for cand in (seq, seq[::-1]):
        for i in range(len(cand)):
            rot = tuple(cand[i:] + cand[:i])
            if best is None or rot < best:
                best = rot
    return best


@dataclass(frozen=True)
class Face:
    kind: str  # "hexagon" | "sgon"
    vertices: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[frozenset]:
        vs = self.vertices
        return [frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))]

    def edge_set(self) -> frozenset:
        return frozenset(self.edges())


def enumerate_hexagons(X: CayleyGraph) -> list[Face]:
    """The |G|/3 hexagons g, ga, gab, gaba, gabab, gababa."""
    found = {}
    for g in range(X.n):
        walk = [g]
        for step in (A, B, A, B, A):
            walk.append(X.nbr[walk[-1]][step])
        if X.nbr[walk[-1]][B] != g or len(set(walk)) != 6:
            raise InvariantViolation(f"(ab)^3 walk from {g} is not a hexagon: {walk}")
        key = _canonical_cycle(walk)
        found.setdefault(key, Face("hexagon", key))
    faces = [found[k] for k in sorted(found)]
    if 3 * len(faces) != X.n:
        raise InvariantViolation(f"found {len(faces)} hexagons, expected {X.n // 3}")
    return faces


def enumerate_sgons(X: CayleyGraph) -> list[Face]:
    """Orbits of right multiplication by b: |G|/s disjoint s-gons."""
    seen = set()
    faces = []
    for g in range(X.n):
        if g in seen:
            continue
        walk = [g]
        while X.nbr[walk[-1]][B] != g:
            walk.append(X.nbr[walk[-1]][B])
        if len(walk) != X.s:
            raise InvariantViolation(f"b-orbit of {g} has length {len(walk)}, expected s={X.s}")
        seen.update(walk)
        faces.append(Face("sgon", _canonical_cycle(walk)))
    faces.sort(key=lambda f: f.vertices)
    if X.s * len(faces) != X.n:
        raise InvariantViolation("s-gon count mismatch")
    return faces


@dataclass(frozen=True)
class CayleyMapSummary:
    genus: int
    num_hexagons: int
    num_sgons: int
    s: int
    order: int

    def euler_characteristic(self) -> int:
        n = self.order
        return n - 3 * n // 2 + self.num_hexagons + self.num_sgons

    def to_dict(self) -> dict:
        return {"genus": self.genus, "num_hexagons": self.num_hexagons,
                "num_sgons": self.num_sgons, "s": self.s, "order": self.order,
                "euler_characteristic": self.euler_characteristic()}


def map_summary(order: int, s: int) -> CayleyMapSummary:
    """Genus 1 + (s-6)|G|/12s of the canonical Cayley map."""
    genus = 1 + Fraction((s - 6) * order, 12 * s)
    if genus.denominator != 1 or order % 3 or order % s:
        raise ValueError(f"|G|={order}, s={s} do not give an integral Cayley map")
    summary = CayleyMapSummary(int(genus), order // 3, order // s, s, order)
    if summary.euler_characteristic() != 2 - 2 * summary.genus:
        raise InvariantViolation("Euler characteristic mismatch")
    return summary
