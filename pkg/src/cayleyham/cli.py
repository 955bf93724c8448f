"""Command-line front end: solve, analyze, verify, export."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .catalog import lookup
from .cayley import build_cayley, enumerate_hexagons, enumerate_sgons
from .errors import BudgetExhausted, CayleyHamError, InvariantViolation, NoWitnessFound
from .export import (ExportFormatError, cayley_dot, cayley_json, certificate_json, dumps, hexgraph_dot,
                     hexgraph_json, load_certificate_json, load_graph_json, witness_json)
from .groups import FiniteGroup, group_from_permutations, group_from_presentation, load_permutation_input, \
    parse_presentation, validate_233
from .hamilton import TheoremResult, solve_theorem, verify_certificate
from .hexgraph import hex_from_cosets, hex_from_faces
from .invariants import analyze, jaeger_audit
from .stability import DEFAULT_BUDGET

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

log = logging.getLogger("cayleyham")


class InputError(CayleyHamError):
    pass


def resolve_input(args) -> tuple[FiniteGroup, int, dict]:
    """The group, s, and an echo of where they came from."""
    if args.preset:
        try:
            entry = lookup(args.preset)
        except KeyError as exc:
            raise InputError(exc.args[0]) from exc
        return entry.group(), entry.s, {"preset": entry.name, "title": entry.title, "generators": entry.generators}
    if args.presentation:
        text = _read(args.presentation)
        pres = parse_presentation(text)
        G = group_from_presentation(pres, name=Path(args.presentation).stem)
        return G, pres.s, {"presentation": str(pres)}
    text = _read(args.perms)
    try:
        a, b, s = load_permutation_input(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"bad permutation file: {exc}") from exc
    G = group_from_permutations(a, b, name=Path(args.perms).stem)
    return G, s, {"permutations": {"degree": a.degree, "a": list(a.images), "b": list(b.images), "s": s}}


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_json(path: str) -> dict:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def build_report(result: TheoremResult, echo: dict, timings: bool = False) -> dict:
    X = result.X
    words = result.group.element_words
    audit = jaeger_audit(result.hex_cosets.graph, result.witness.S, maximum=True)
    certs = {"theorem": certificate_json(result.certificate, X),
             "path": certificate_json(result.path, X) if result.path else None,
             "augmented": None}
    augmentation = None
    if result.augmented is not None:
        certs["augmented"] = certificate_json(result.augmented.certificate, X)
        augmentation = {"found": True, "sgons": result.augmented.sgons_used,
                        "hexagons": result.augmented.hexagons_used}
    elif "augment" in result.timings:
        augmentation = {"found": False}
    report = {
        "input": echo,
        "validation": result.validation.to_dict(),
        "map": result.summary.to_dict(),
        "hex_graph": {
            "invariants": result.invariants.to_dict(),
            "constructions_agree": True,
            "bijection": list(result.bijection),
            "action": result.action.to_dict(),
        },
        "witness": witness_json(result.witness),
        "audit": audit.to_dict(),
        "face_tree": {"hexagons": [[words[v] for v in f.vertices] for f in result.tree.faces],
                      "tree_edges": [list(e) for e in result.tree.tree_edges]},
        "certificates": certs,
        "augmentation": augmentation,
    }
    if timings:
        report["timings"] = {k: round(v, 6) for k, v in sorted(result.timings.items())}
    return report


def human_summary(report: dict) -> str:
    inp = report["input"]
    label = inp.get("preset") or inp.get("presentation") or "permutations"
    val, mp, inv = report["validation"], report["map"], report["hex_graph"]["invariants"]
    lines = [
        f"input        {label}",
        f"|G|          {val['order']} ({val['order_mod4']} mod 4), s = {val['s']}",
        f"map          genus {mp['genus']}, {mp['num_hexagons']} hexagons, {mp['num_sgons']} s-gons",
        f"Hex(X)       n={inv['n']} girth={inv['girth']} zeta={inv['zeta']} exceptional={inv['exceptional']}",
        f"witness      |S|={len(report['witness']['S'])} complement {report['witness']['kind']}",
    ]
    for name, cert in report["certificates"].items():
        if cert is None:
            continue
        extra = f", missed {' '.join(cert['missed'])}" if "missed" in cert else ""
        lines.append(f"{name:<12} {cert['kind']} of length {cert['length']}{extra}")
    aug = report.get("augmentation")
    if aug is not None and aug["found"]:
        lines.append(f"augmentation {aug['sgons']} s-gons + {aug['hexagons']} hexagons")
    elif aug is not None:
        lines.append("augmentation not found within budget")
    return "\n".join(lines) + "\n"


def _emit(text: str, out_dir: Path | None, filename: str):
    if out_dir is None:
        sys.stdout.write(text)
        return
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / filename).write_text(text, encoding="utf-8")


# ---------------------------------------------------------------------------
# commands

def cmd_solve(args) -> int:
    G, s, echo = resolve_input(args)
    augment = args.augment if args.augment is not None else bool(args.preset)
    result = solve_theorem(G, s, budget=args.budget, method=args.method, augment=augment, threads=args.threads)
    report = build_report(result, echo, timings=args.timings)
    text = human_summary(report) if args.human else dumps(report)
    if args.out:
        out = Path(args.out)
        X = result.X
        _emit(dumps(report), out, "report.json")
        _emit(dumps(cayley_json(X, result.hexagons, result.sgons)), out, "graph.json")
        _emit(dumps(witness_json(result.witness)), out, "witness.json")
        for name, cert in report["certificates"].items():
            if cert is not None:
                _emit(dumps(cert), out, f"{name}.json")
    sys.stdout.write(text)
    return EXIT_OK


def cmd_analyze(args) -> int:
    G, s, _ = resolve_input(args)
    validate_233(G, s).raise_if_invalid()
    inv = analyze(hex_from_cosets(G).graph)
    sys.stdout.write(dumps(inv.to_dict()))
    return EXIT_OK


def cmd_verify(args) -> int:
    words, adj = load_graph_json(_load_json(args.graph))
    cert = load_certificate_json(_load_json(args.certificate), words)
    report = verify_certificate(adj, cert)
    sys.stdout.write(dumps({"ok": report.ok, "kind": cert.kind, "length": len(cert.vertices),
                            "failures": report.failures}))
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_export(args) -> int:
    G, s, _ = resolve_input(args)
    X = build_cayley(G, s)
    out = Path(args.out) if args.out else None
    fmt = "json" if args.json else "dot"
    if args.hex:
        hexes = enumerate_hexagons(X)
        h = hex_from_cosets(G) if args.hex == "cosets" else hex_from_faces(X, hexes)
        text = hexgraph_dot(h, X) if fmt == "dot" else dumps(hexgraph_json(h, X))
        _emit(text, out, f"hex_{args.hex}.{fmt}")
        return EXIT_OK
    if fmt == "json":
        _emit(dumps(cayley_json(X, enumerate_hexagons(X), enumerate_sgons(X))), out, "graph.json")
        return EXIT_OK
    highlight = []
    if args.highlight:
        cert = load_certificate_json(_load_json(args.highlight), list(G.element_words))
        report = verify_certificate(X, cert)
        if not report:
            log.error("highlight certificate does not verify: %s", "; ".join(report.failures))
            return EXIT_VERIFY
        highlight = cert.edges()
    _emit(cayley_dot(X, highlight, name=G.name or "X"), out, "graph.dot")
    return EXIT_OK


# ---------------------------------------------------------------------------

def _add_input(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", help="catalog group: z6, s3z3, s4, q8s3, a4, a5")
    src.add_argument("--presentation", metavar="FILE", help="text presentation a^2 = b^s = (a*b)^3 = 1; ...")
    src.add_argument("--perms", metavar="FILE", help="JSON {degree, a, b, s} with 0-based images")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cayleyham",
                                     description="Hamilton cycles and paths in cubic Cayley graphs of (2,s,3)-groups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="build the certificates and print a JSON report")
    _add_input(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget (default %(default)s)")
    p.add_argument("--threads", type=int, default=1, help="worker processes for the s-gon search")
    p.add_argument("--augment", action=argparse.BooleanOptionalAction, default=None,
                   help="search for a full Hamilton cycle using s-gon faces (default: on for presets)")
    p.add_argument("--method", choices=("auto", "direct", "reduction"), default="auto",
                   help="solver for |Hex| = 0 mod 4")
    p.add_argument("--human", action="store_true", help="print a short text summary instead of JSON")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings in the report")
    p.add_argument("--out", metavar="DIR", help="also write report, graph, witness and certificates here")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("analyze", help="invariants of the hexagon graph")
    _add_input(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check a certificate against a graph file")
    p.add_argument("graph", help="graph JSON as written by export --json or solve --out")
    p.add_argument("certificate", help="certificate JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write the Cayley graph (or hexagon graph) as DOT or JSON")
    _add_input(p)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="Graphviz output (default)")
    fmt.add_argument("--json", action="store_true", help="JSON output")
    p.add_argument("--hex", choices=("faces", "cosets"), help="export the hexagon graph instead")
    p.add_argument("--highlight", metavar="CERT", help="certificate whose edges are marked in the DOT output")
    p.add_argument("--out", metavar="DIR", help="write files here instead of standard output")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    start = time.perf_counter()
    try:
        code = args.func(args)
    except BudgetExhausted as exc:
        log.error("%s", exc)
        return EXIT_BUDGET
    except (InvariantViolation, NoWitnessFound) as exc:
        log.error("verification failed: %s", exc)
        return EXIT_VERIFY
    except (CayleyHamError, ExportFormatError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    log.info("done in %.3fs", time.perf_counter() - start)
    return code


if __name__ == "__main__":
    sys.exit(main())
