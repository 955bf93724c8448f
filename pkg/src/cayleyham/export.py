"""DOT and JSON serialization of Cayley graphs, hexagon graphs, witnesses and certificates.

Vertices are named by the shortest word reaching them in the generators,
so exported files are readable without the group table.
"""

from __future__ import annotations

import json
from typing import Iterable

from .cayley import CayleyGraph, Face
from .errors import CayleyHamError
from .hamilton import CYCLE, NEAR_CYCLE, PATH, HamiltonCertificate
from .hexgraph import HexGraph
from .stability import StableSetSolution


class ExportFormatError(CayleyHamError, ValueError):
    pass


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def cayley_dot(X: CayleyGraph, highlight: Iterable[tuple[int, int]] = (), name: str = "X") -> str:
    marked = {frozenset(e) for e in highlight}
    lines = [f"graph {_quote(name)} {{", "  node [shape=circle];"]
    for v in range(X.n):
        lines.append(f"  {v} [label={_quote(X.word(v))}];")
    for u, v, label in X.edges():
        attrs = [f"label={label}"]
        if frozenset((u, v)) in marked:
            attrs += ["highlight=true", "color=red", "penwidth=3"]
        lines.append(f"  {u} -- {v} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _face_dict(X: CayleyGraph, f: Face) -> dict:
    return {"kind": f.kind, "vertices": [X.word(v) for v in f.vertices]}


def cayley_json(X: CayleyGraph, hexagons: list[Face], sgons: list[Face]) -> dict:
    return {
        "group": X.group.name,
        "order": X.n,
        "s": X.s,
        "vertices": [X.word(v) for v in range(X.n)],
        "edges": [{"u": X.word(u), "v": X.word(v), "label": label} for u, v, label in X.edges()],
        "hexagons": [_face_dict(X, f) for f in hexagons],
        "sgons": [_face_dict(X, f) for f in sgons],
    }


def _hex_annotation(X: CayleyGraph | None, h: HexGraph, i: int) -> str:
    origin = h.origin[i]
    if h.kind == "faces":
        vs = origin.vertices
    else:
        vs = origin
    if X is None:
        return " ".join(map(str, vs))
    return " ".join(X.word(v) for v in vs)


def hexgraph_dot(h: HexGraph, X: CayleyGraph | None = None, highlight: Iterable[int] = ()) -> str:
    marked = set(highlight)
    lines = [f"graph \"Hex_{h.kind}\" {{"]
    for i in range(h.n):
        extra = ", style=filled, fillcolor=lightblue" if i in marked else ""
        lines.append(f"  {i} [label={_quote(_hex_annotation(X, h, i))}{extra}];")
    for u, v in h.graph.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hexgraph_json(h: HexGraph, X: CayleyGraph | None = None) -> dict:
    out = {
        "construction": h.kind,
        "vertices": [_hex_annotation(X, h, i).split(" ") for i in range(h.n)],
        "edges": [list(e) for e in h.graph.edges],
    }
    if h.edge_origin and X is not None:
        out["shared_a_edges"] = [[X.word(u), X.word(v)] for u, v in h.edge_origin]
    return out


def witness_json(sol: StableSetSolution) -> dict:
    return {"S": list(sol.S), "complement": list(sol.complement), "kind": sol.complement_kind,
            "single_edge": list(sol.single_edge) if sol.single_edge else None}


def certificate_json(cert: HamiltonCertificate, X: CayleyGraph) -> dict:
    return cert.to_dict(words=X.group.element_words)


# ---------------------------------------------------------------------------
# reading back

def load_graph_json(data: dict) -> tuple[list[str], list[set[int]]]:
    """Vertex words and adjacency sets from a ``cayley_json`` document."""
    try:
        words = [str(w) for w in data["vertices"]]
        index = {w: i for i, w in enumerate(words)}
        if len(index) != len(words):
            raise ExportFormatError("duplicate vertex names in graph file")
        adj: list[set[int]] = [set() for _ in words]
        for e in data["edges"]:
            u, v = index[e["u"]], index[e["v"]]
            adj[u].add(v)
            adj[v].add(u)
    except (KeyError, TypeError) as exc:
        raise ExportFormatError(f"malformed graph file: {exc!r}") from exc
    return words, adj


def load_certificate_json(data: dict, words: list[str]) -> HamiltonCertificate:
    """Certificate from JSON; vertex names are resolved against ``words``.

    Unknown names map to -1, which verification reports as out of range.
    """
    index = {w: i for i, w in enumerate(words)}
    try:
        kind = data["kind"]
        if kind not in (CYCLE, NEAR_CYCLE, PATH):
            raise ExportFormatError(f"unknown certificate kind {kind!r}")
        vertices = tuple(index.get(str(w), -1) for w in data["vertices"])
        missed = data.get("missed")
        if missed is not None:
            if len(missed) != 2:
                raise ExportFormatError("missed must list two vertices")
            missed = (index.get(str(missed[0]), -1), index.get(str(missed[1]), -1))
    except (KeyError, TypeError) as exc:
        raise ExportFormatError(f"malformed certificate file: {exc!r}") from exc
    return HamiltonCertificate(kind, vertices, missed)
