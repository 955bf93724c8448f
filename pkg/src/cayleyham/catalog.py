"""The six worked example groups and the results expected for each."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from .groups import FiniteGroup, Permutation, group_from_permutations, group_from_presentation, parse_presentation


# ---------------------------------------------------------------------------
# Q8 x| S3

def _qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)


def _sign(sigma) -> int:
    return (-1) ** sum(1 for i, j in itertools.combinations(range(3), 2) if sigma[i] > sigma[j])


def _act(sigma, q):
    """sigma sends the unit e_m to sgn(sigma) e_sigma(m), with (i, j, k) = (e_0, e_1, e_2)."""
    out = [q[0], 0, 0, 0]
    sg = _sign(sigma)
    for m in range(3):
        out[1 + sigma[m]] = sg * q[1 + m]
    return tuple(out)


def _compose(s1, s2):
    # s1 first, then s2
    return tuple(s2[s1[i]] for i in range(3))


def q8s3_multiply(x, y):
    """Product in Q8 x| S3 on pairs (q, sigma).

    S3 acts on the right, so the product is (q1^sigma2 * q2, sigma1 sigma2)
    with permutations composed left to right.
    """
    (q1, s1), (q2, s2) = x, y
    return (_qmul(_act(s2, q1), q2), _compose(s1, s2))


def q8s3_elements():
    units = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    quats = [tuple(sg * c for c in u) for u in units for sg in (1, -1)]
    return [(q, s) for q in quats for s in itertools.permutations(range(3))]


def q8s3_group() -> FiniteGroup:
    elements = q8s3_elements()
    index = {x: i for i, x in enumerate(elements)}
    one, i_unit = (1, 0, 0, 0), (0, 1, 0, 0)
    a = (one, (0, 2, 1))      # (1, (23))
    b = (i_unit, (1, 0, 2))   # (i, (12))
    # right regular representation: x -> x * g
    perm = {g: Permutation(tuple(index[q8s3_multiply(x, g)] for x in elements)) for g in (a, b)}
    return group_from_permutations(perm[a], perm[b], name="q8s3")


# ---------------------------------------------------------------------------
# the other five

def z6_group() -> FiniteGroup:
    # a = 3, b = 1 acting regularly on Z6
    a = Permutation(tuple((x + 3) % 6 for x in range(6)))
    b = Permutation(tuple((x + 1) % 6 for x in range(6)))
    return group_from_permutations(a, b, name="z6")


def s3z3_group() -> FiniteGroup:
    # points 1..3 carry S3, points 4..6 carry Z3
    a = Permutation.from_cycles([[1, 2]], 6)
    b = Permutation.from_cycles([[1, 3], [4, 5, 6]], 6)
    return group_from_permutations(a, b, name="s3z3")


def s4_group() -> FiniteGroup:
    return group_from_permutations(Permutation.from_cycles([[1, 2]], 4),
                                   Permutation.from_cycles([[1, 2, 3, 4]], 4), name="s4")


def a4_group() -> FiniteGroup:
    return group_from_permutations(Permutation.from_cycles([[1, 2], [3, 4]], 4),
                                   Permutation.from_cycles([[1, 2, 3]], 4), name="a4")


def a5_group() -> FiniteGroup:
    return group_from_permutations(Permutation.from_cycles([[1, 2], [3, 4]], 5),
                                   Permutation.from_cycles([[1, 2, 3, 4, 5]], 5), name="a5")


@dataclass(frozen=True)
class Expected:
    order: int
    hex_graph: str
    certificate: str         # "Cycle" or "NearCycle2"
    cycle_length: int
    hex_tree_size: int
    sgon_count: int          # s-gons in the Hamilton tree of faces (0 when not needed)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    title: str
    s: int
    generators: str
    build: Callable[[], FiniteGroup] = field(repr=False, compare=False)
    expected: Expected
    presentation: str | None = None

    def group(self) -> FiniteGroup:
        return self.build()

    def group_from_presentation(self) -> FiniteGroup | None:
        if self.presentation is None:
            return None
        return group_from_presentation(parse_presentation(self.presentation), name=self.name)


_ENTRIES = (
    CatalogEntry("z6", "Z6", 6, "a=3, b=1", z6_group,
                 Expected(6, "Theta2", "Cycle", 6, 1, 0)),
    CatalogEntry("s3z3", "S3 x Z3", 6, "a=((12),0), b=((13),1)", s3z3_group,
                 Expected(18, "K33", "Cycle", 18, 4, 0)),
    CatalogEntry("s4", "S4", 4, "a=(12), b=(1234)", s4_group,
                 Expected(24, "Q3", "NearCycle2", 22, 5, 1),
                 presentation="a^2 = b^4 = (a*b)^3 = 1"),
    CatalogEntry("q8s3", "Q8 x| S3", 8, "a=(1,(23)), b=(i,(12))", q8s3_group,
                 Expected(48, "MoebiusKantor", "NearCycle2", 46, 11, 1)),
    CatalogEntry("a4", "A4", 3, "a=(12)(34), b=(123)", a4_group,
                 Expected(12, "K4", "NearCycle2", 10, 2, 2),
                 presentation="a^2 = b^3 = (a*b)^3 = 1"),
    CatalogEntry("a5", "A5", 5, "a=(12)(34), b=(12345)", a5_group,
                 Expected(60, "Dodecahedron", "NearCycle2", 58, 14, 2),
                 presentation="a^2 = b^5 = (a*b)^3 = 1"),
)


def catalog_entries() -> list[CatalogEntry]:
    return list(_ENTRIES)


def lookup(name: str) -> CatalogEntry:
    for entry in _ENTRIES:
        if entry.name == name.lower():
            return entry
    raise KeyError(f"unknown preset {name!r}; choose from {', '.join(e.name for e in _ENTRIES)}")
