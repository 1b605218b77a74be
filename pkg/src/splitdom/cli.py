"""Command-line interface.

Exit codes: 0 success, 1 property-false (e.g. not in the family, no
certificate), 2 input error, 3 theorem violation (test-triage signal).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .coloring import (
    ColoringCertificate,
    chromatic_number_exact,
    clique_number,
    color_diamond_free_certified,
    color_gem_free_certified,
)
from .decomposition import (
    BisimplicialCase,
    CliqueCutsetCase,
    LowDegreeCase,
    PetersenBlowupCase,
    PetersenGraphCase,
    structure_case_diamond,
    structure_case_gem,
)
from .domination import find_dominating_split, proof_guided_reduce
from .errors import (
    BudgetExceededError,
    GraphInputError,
    PreconditionError,
    TheoremViolationError,
)
from .graphs import Graph, build_graph, from_graph6, parse_edge_list, to_graph6
from .harness import campaign_names, random_graph, run_campaign
from .patterns import catalog_lookup, family_membership, pattern_names

EXIT_OK = 0
EXIT_PROPERTY_FALSE = 1
EXIT_INPUT_ERROR = 2
EXIT_THEOREM_VIOLATION = 3


def _read_graph(path: str, fmt: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphInputError(f"cannot read {path}: {exc}") from exc
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edgelist":
        return parse_edge_list(text)
    return build_graph(text)


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
        return
    for key, value in payload.items():
        print(f"{key}: {value}")


def _case_payload(case) -> dict:
    if isinstance(case, CliqueCutsetCase):
        return {"case": "clique-cutset", "cutset": list(case.cutset)}
    if isinstance(case, BisimplicialCase):
        return {
            "case": "bisimplicial",
            "vertex": case.vertex,
            "clique_a": list(case.clique_a),
            "clique_b": list(case.clique_b),
        }
    if isinstance(case, PetersenBlowupCase):
        return {
            "case": "petersen-blowup",
            "bags": [list(b) for b in case.partition.bags],
        }
    if isinstance(case, PetersenGraphCase):
        return {"case": "petersen-graph", "iso": list(case.iso.mapping)}
    assert isinstance(case, LowDegreeCase)
    return {
        "case": "low-degree",
        "vertex": case.vertex,
        "bound": case.bound,
        "degree": case.degree,
    }


def _coloring_payload(cert: ColoringCertificate) -> dict:
    return {
        "colors": list(cert.colors),
        "color_count": cert.color_count,
        "clique_witness": list(cert.clique_witness),
        "bound_rule": cert.bound_rule,
        "bound_value": cert.bound_value,
        "trace": [asdict(step) for step in cert.trace],
    }


def _cmd_classify(args) -> int:
    g = _read_graph(args.input, args.format)
    result = family_membership(g, args.family)
    payload: dict = {"family": result.family, "is_free": result.is_free}
    if result.witness is not None:
        name, emb = result.witness
        payload["witness"] = {"pattern": name, "mapping": list(emb.mapping)}
    _emit(payload, args.json)
    return EXIT_OK if result.is_free else EXIT_PROPERTY_FALSE


def _cmd_dominate(args) -> int:
    g = _read_graph(args.input, args.format)
    if args.method == "exact":
        cert = find_dominating_split(g, args.kind)
    else:
        cert = proof_guided_reduce(g, args.kind)
    if cert is None:
        reason = (
            "proved non-existent by exhaustive search"
            if args.method == "exact"
            else "reducer stalled (no certificate produced)"
        )
        _emit({"kind": args.kind, "certificate": None, "reason": reason}, args.json)
        return EXIT_PROPERTY_FALSE
    payload = {
        "kind": cert.kind,
        "vertices": list(cert.vertices),
        "clique": list(cert.partition.clique),
        "stable": list(cert.partition.stable),
        "connected": cert.connected,
    }
    _emit(payload, args.json)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    g = _read_graph(args.input, args.format)
    if args.mode == "gem":
        case = structure_case_gem(g)
    else:
        case = structure_case_diamond(g)
    _emit(_case_payload(case), args.json)
    return EXIT_OK


def _cmd_color(args) -> int:
    g = _read_graph(args.input, args.format)
    if args.mode == "gem":
        cert = color_gem_free_certified(g)
    elif args.mode == "diamond":
        cert = color_diamond_free_certified(g)
    else:
        chi, colors = chromatic_number_exact(g)
        _, witness = clique_number(g)
        cert = ColoringCertificate(
            colors=colors,
            color_count=chi,
            clique_witness=witness,
            bound_rule="exact",
            bound_value=chi,
            trace=(),
        )
    _emit(_coloring_payload(cert), args.json)
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_campaign(
        args.campaign, max_n=args.max_n, seed=args.seed, samples=args.samples
    )
    print(report.to_json())
    return EXIT_OK if report.failed == 0 else EXIT_THEOREM_VIOLATION


def _cmd_generate(args) -> int:
    if args.pattern is not None:
        print(to_graph6(catalog_lookup(args.pattern)))
        return EXIT_OK
    n, p, seed = args.random
    g = random_graph(int(n), float(p), int(seed))
    print(to_graph6(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitdom",
        description=(
            "Forbidden-pattern classification, split-graph domination search, "
            "structural decomposition, and certified coloring for small graphs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", required=True, help="graph file (graph6 or edge list), '-' for stdin")
        p.add_argument(
            "--format",
            choices=("auto", "graph6", "edgelist"),
            default="auto",
            help="input format (default: sniffed)",
        )
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")

    p = sub.add_parser("classify", help="test family freeness, with witness")
    add_input(p)
    p.add_argument("--family", required=True, choices=("L1", "L2", "C", "D", "F", "H"))
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("dominate", help="search for a dominating induced split subgraph")
    add_input(p)
    p.add_argument("--kind", required=True, choices=("split", "complete-split"))
    p.add_argument("--method", choices=("exact", "proof-guided"), default="exact")
    p.set_defaults(func=_cmd_dominate)

    p = sub.add_parser("decompose", help="structure case of the input graph")
    add_input(p)
    p.add_argument("--mode", required=True, choices=("gem", "diamond"))
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("color", help="certified or exact coloring")
    add_input(p)
    p.add_argument("--mode", required=True, choices=("gem", "diamond", "exact"))
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("--campaign", required=True, help=f"one of: {', '.join(campaign_names())}")
    p.add_argument("--max-n", type=int, default=8, dest="max_n")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("generate", help="emit a catalog or random graph as graph6")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pattern", help=f"catalog name, e.g. {', '.join(pattern_names()[:6])}, ...")
    group.add_argument("--random", nargs=3, metavar=("N", "P", "SEED"), help="G(n, p) with a seed")
    p.set_defaults(func=_cmd_generate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphInputError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PROPERTY_FALSE
    except TheoremViolationError as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM_VIOLATION


def console_main() -> None:
    sys.exit(main())
