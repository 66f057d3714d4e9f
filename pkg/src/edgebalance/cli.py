"""Command-line front end.

Exit status: 0 success, 1 usage error, 2 unreadable or unsuitable input,
3 budget exceeded. Claim verdicts from ``verify`` never change the status.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .atlas import MAX_ENUMERATION_ORDER, parse_predicate, search
from .classify import full_report
from .errors import BudgetExceeded, DisconnectedGraph, GraphError, ParameterOutOfRange, ParseError, TooLargeForExactIso
from .generators import FAMILIES, generate
from .graph import Graph
from .invariants import Convention, edge_szeged_index, szeged_index
from .io import parse_graph6, read_graphs, to_edgelist, to_graph6
from .products import DEFAULT_VERTEX_BUDGET, cartesian_product, lexicographic_product
from .verify import CHECK_IDS, VerifyConfig, run_all

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def envelope(command: str, parameters: dict, convention: Optional[str], payload) -> str:
    doc = {
        "tool": "edgebalance",
        "version": __version__,
        "command": command,
        "parameters": parameters,
        "convention": convention,
        "payload": payload,
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _emit(text: str, out: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out and out != "-":
        tmp = Path(out).with_name(Path(out).name + ".tmp")
        tmp.write_text(text, encoding="utf-8")
        os.replace(tmp, out)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def _read_input(source: str, fmt: str) -> list[Graph]:
    if source == "-":
        graphs = read_graphs(sys.stdin, fmt)
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                graphs = read_graphs(fh, fmt)
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc}") from exc
    if not graphs:
        raise ParseError("no graph in input")
    return graphs


def _graph_arg(value: str, fmt: str) -> Graph:
    """A product operand: a path to a file, ``-`` for stdin, or an inline graph6 string."""
    if value == "-" or Path(value).is_file():
        return _read_input(value, fmt)[0]
    return parse_graph6(value)


def cmd_generate(args) -> None:
    g = generate(args.family, *args.params)
    _emit(to_graph6(g) if args.out == "graph6" else to_edgelist(g), None)


def cmd_classify(args) -> None:
    conv = Convention.parse(args.convention)
    lines = []
    for g in _read_input(args.input, args.format):
        payload = {"graph6": to_graph6(g), **full_report(g, conv).to_dict()}
        lines.append(envelope("classify", {"format": args.format}, conv.value, payload))
    _emit("\n".join(lines), None)


def cmd_index(args) -> None:
    conv = Convention.parse(args.convention)
    want_sz = args.szeged or not args.edge_szeged
    want_sze = args.edge_szeged or not args.szeged
    lines = []
    for g in _read_input(args.input, args.format):
        payload = {"graph6": to_graph6(g)}
        if want_sz:
            payload["szeged"] = szeged_index(g)
        if want_sze:
            payload["edge_szeged"] = edge_szeged_index(g, conv)
        params = {"format": args.format, "szeged": want_sz, "edge_szeged": want_sze}
        lines.append(envelope("index", params, conv.value, payload))
    _emit("\n".join(lines), None)


def cmd_product(args) -> None:
    a = _graph_arg(args.a, args.format)
    b = _graph_arg(args.b, args.format)
    build = lexicographic_product if args.lexicographic else cartesian_product
    p = build(a, b, vertex_budget=args.budget)
    _emit(to_graph6(p) if args.out == "graph6" else to_edgelist(p), None)


def cmd_enumerate(args) -> None:
    if args.n > MAX_ENUMERATION_ORDER:
        raise BudgetExceeded(f"enumeration is limited to {MAX_ENUMERATION_ORDER} vertices, got {args.n}")
    if args.n < 1 or args.min_n < 1:
        raise UsageError("--n and --min-n must be >= 1")
    pred = parse_predicate(args.predicate)
    entries = search(pred, args.n, Convention.parse(args.convention), n_min=args.min_n)
    _emit("".join(e.to_json() + "\n" for e in entries) or "", args.output)


def cmd_verify(args) -> None:
    checks = None
    if args.checks:
        checks = [c.strip().upper() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in checks if c not in CHECK_IDS]
        if unknown:
            raise UsageError(f"unknown checks {unknown}; choose from {','.join(CHECK_IDS)}")
    report = run_all(VerifyConfig(atlas_n_max=args.budget), checks)
    if args.format == "text":
        text = report.to_text()
    else:
        params = {"checks": checks or list(CHECK_IDS), "budget": args.budget}
        text = envelope("verify", params, "both", report.to_dict())
    _emit(text, args.output)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="edgebalance", description="Edge distance-balance invariants of small graphs.")
    p.add_argument("--version", action="version", version=f"edgebalance {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_input(sp):
        sp.add_argument("--in", dest="input", default="-", help="input file, '-' for stdin")
        sp.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")

    g = sub.add_parser("generate", help="write a standard graph")
    g.add_argument("family", choices=sorted(FAMILIES))
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--out", choices=("graph6", "edgelist"), default="graph6")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("classify", help="classification report as JSON")
    add_input(c)
    c.add_argument("--convention", choices=("strict", "augmented"), default="augmented")
    c.set_defaults(func=cmd_classify)

    i = sub.add_parser("index", help="Szeged and edge-Szeged indices as JSON")
    add_input(i)
    i.add_argument("--szeged", action="store_true")
    i.add_argument("--edge-szeged", action="store_true")
    i.add_argument("--convention", choices=("strict", "augmented"), default="strict")
    i.set_defaults(func=cmd_index)

    pr = sub.add_parser("product", help="cartesian or lexicographic product, as graph6")
    kind = pr.add_mutually_exclusive_group()
    kind.add_argument("--cartesian", action="store_true", default=True)
    kind.add_argument("--lexicographic", action="store_true")
    pr.add_argument("a", help="graph6 string, file path, or '-'")
    pr.add_argument("b", help="graph6 string, file path, or '-'")
    pr.add_argument("--format", choices=("graph6", "edgelist"), default="graph6",
                    help="format of file operands")
    pr.add_argument("--out", choices=("graph6", "edgelist"), default="graph6")
    pr.add_argument("--budget", type=int, default=DEFAULT_VERTEX_BUDGET, help="vertex budget")
    pr.set_defaults(func=cmd_product)

    e = sub.add_parser("enumerate", help="JSON-lines catalog of connected graphs")
    e.add_argument("--n", type=int, required=True, help="largest vertex count")
    e.add_argument("--min-n", type=int, default=1)
    e.add_argument("--predicate", default=None,
                   help="comma-separated terms: bipartite, nonbipartite, diameter=K, gt_db=T, "
                        "gt_edb=T, gt_sedb=T, gt_nedb[=T], true, false")
    e.add_argument("--convention", choices=("strict", "augmented"), default="augmented")
    e.add_argument("--out", dest="output", default=None)
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run the claim audit")
    v.add_argument("--checks", default=None, help="comma-separated subset, e.g. C1,C4")
    v.add_argument("--budget", type=int, default=7, help="largest atlas vertex count")
    v.add_argument("--out", dest="output", default=None)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (UsageError, ParameterOutOfRange) as exc:
        print(f"edgebalance: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, TooLargeForExactIso) as exc:
        print(f"edgebalance: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, DisconnectedGraph, GraphError) as exc:
        print(f"edgebalance: bad input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
