"""Command-line interface: ``solve``, ``check``, ``oracle``, ``gen`` and ``complement``.

Machine output is a single JSON object (or edge-list text) on stdout; a short
human-readable summary goes to stderr.  Exit codes for ``solve`` and
``oracle``: 0 solution emitted, 2 no solution exists, 1 usage, parse,
resource or unsupported-pair error, 3 failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from . import recognizers as rec
from .chordal import msc_biregular_to_chordal
from .connectivity import msc_to_2connected, msc_to_disconnected
from .degeneracy import msc_forest_to_degeneracy
from .generators import FAMILIES, GeneratorError, GeneratorSpec, generate
from .graph import Graph, GraphError, complement, subgraph_complement
from .io import ParseError, format_weight, parse_edge_list, parse_graph6, parse_weights, write_edge_list
from .kl import (
    msc_bip_to_cobip,
    msc_bip_to_split,
    msc_cobip_to_bip,
    msc_cobip_to_split,
    msc_split_to_bip,
    msc_split_to_cobip,
)
from .oracle import DEFAULT_CAP, DEFAULT_WEIGHTED_CAP, brute_force_msc, brute_force_weighted_disconnect
from .solution import (
    KINDS,
    ClassTag,
    PreconditionError,
    ResourceLimitError,
    Solution,
    Status,
    VerificationError,
    certificate,
    is_solution,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NONE = 2
EXIT_VERIFY = 3

SOLVE_TARGETS = ("bipartite", "co-bipartite", "split", "chordal", "degeneracy", "2-connected", "disconnected")
SOURCES = ("auto", "bipartite", "co-bipartite", "split", "biregular", "forest")

# Per target, the sources with an implemented theorem, in routing preference order.
ROUTES: dict[str, tuple[str, ...]] = {
    "bipartite": ("split", "co-bipartite"),
    "co-bipartite": ("bipartite", "split"),
    "split": ("bipartite", "co-bipartite"),
    "chordal": ("biregular",),
    "degeneracy": ("forest",),
}

SOLVERS: dict[tuple[str, str], Callable[[Graph], Solution]] = {
    ("split", "bipartite"): msc_split_to_bip,
    ("co-bipartite", "bipartite"): msc_cobip_to_bip,
    ("bipartite", "co-bipartite"): msc_bip_to_cobip,
    ("split", "co-bipartite"): msc_split_to_cobip,
    ("bipartite", "split"): msc_bip_to_split,
    ("co-bipartite", "split"): msc_cobip_to_split,
    ("biregular", "chordal"): msc_biregular_to_chordal,
}


class CliError(Exception):
    """A user-facing failure that exits with status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise CliError(message)


def _in_source(g: Graph, source: str) -> bool:
    if source == "bipartite":
        return rec.is_bipartite(g)
    if source == "co-bipartite":
        return rec.is_cobipartite(g)
    if source == "split":
        return rec.is_split(g)
    if source == "forest":
        return rec.is_forest(g)
    if source == "biregular":
        return g.n > 0 and rec.biregular_degree(g) is not None and rec.is_two_connected(g)
    raise AssertionError(source)


def route(g: Graph, target: str, source: str) -> str:
    """The source class whose theorem handles ``g`` for ``target``."""
    if target in ("2-connected", "disconnected"):
        if source != "auto":
            raise CliError(f"unsupported source/target pair: {target} takes any graph, not --source {source}")
        return "any"
    allowed = ROUTES[target]
    if source != "auto":
        if source not in allowed:
            raise CliError(f"unsupported source/target pair: no theorem for {source} -> {target}")
        if not _in_source(g, source):
            raise CliError(f"unsupported source/target pair: input graph is not {_describe(source)}")
        return source
    for candidate in allowed:
        if _in_source(g, candidate):
            return candidate
    wanted = " or ".join(_describe(s) for s in allowed)
    raise CliError(f"unsupported source/target pair: input graph is not {wanted}")


def _describe(source: str) -> str:
    return "2-connected biregular" if source == "biregular" else source


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None


def _read_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    return parse_graph6(text) if fmt == "graph6" else parse_edge_list(text)


def _target(name: str, k: int | None) -> ClassTag:
    if name == "degeneracy" and k is None:
        raise CliError("--k is required for the degeneracy target")
    if name != "degeneracy" and k is not None:
        raise CliError(f"--k applies only to the degeneracy target, not {name}")
    return ClassTag(name, k)


def _record(g: Graph, sol: Solution, source: str) -> dict[str, Any]:
    if sol.found and not is_solution(g, sol.vertices, sol.target):
        raise VerificationError(f"G ⊕ {list(sol.vertices)} is not {sol.target}")
    weight = None if sol.weight is None else format_weight(sol.weight)
    return {
        "target": str(sol.target),
        "source": source,
        "solution": list(sol.vertices),
        "size": sol.size,
        "weight": weight,
        "status": sol.status.value,
        "verified": True,
    }


def _emit(record: dict[str, Any]) -> int:
    print(json.dumps(record))
    if record["status"] == Status.NONE.value:
        print(f"{record['target']}: no solution", file=sys.stderr)
        return EXIT_NONE
    print(f"{record['target']}: {record['status']} set of size {record['size']} "
          f"via {record['source']}", file=sys.stderr)
    return EXIT_OK


def _weights(args, g: Graph, target: ClassTag):
    if args.weights is None:
        return None
    if target.kind != "disconnected":
        raise CliError("--weights applies only to the disconnected target")
    return parse_weights(_read_text(args.weights), g.n)


def cmd_solve(args) -> int:
    target = _target(args.target, args.k)
    g = _read_graph(args.input, args.format)
    weights = _weights(args, g, target)
    source = route(g, target.kind, args.source)
    try:
        if target.kind == "disconnected":
            sol = msc_to_disconnected(g, weights)
        elif target.kind == "2-connected":
            sol = msc_to_2connected(g)
        elif target.kind == "degeneracy":
            sol = msc_forest_to_degeneracy(g, target.k)
        else:
            sol = SOLVERS[source, target.kind](g)
    except PreconditionError as exc:
        raise CliError(f"unsupported source/target pair: {exc}") from None
    return _emit(_record(g, sol, source))


def cmd_oracle(args) -> int:
    target = _target(args.target, args.k)
    g = _read_graph(args.input, args.format)
    weights = _weights(args, g, target)
    if target.kind == "disconnected":
        cap = DEFAULT_WEIGHTED_CAP if args.cap is None else args.cap
        sol = brute_force_weighted_disconnect(g, weights, cap)
    else:
        sol = brute_force_msc(g, target, DEFAULT_CAP if args.cap is None else args.cap)
    return _emit(_record(g, sol, "brute-force"))


def certificate_json(tag: ClassTag, cert: Any) -> Any:
    kind = tag.kind
    if kind == "bipartite":
        return {"A": sorted(cert.A), "B": sorted(cert.B)}
    if kind == "co-bipartite":
        return {"A": sorted(cert[0]), "B": sorted(cert[1])}
    if kind == "split":
        return {"K": sorted(cert.K), "I": sorted(cert.I)}
    if kind == "chordal":
        return {"peo": list(cert)}
    if kind == "degeneracy":
        return {"k": cert[0], "order": list(cert[1])}
    if kind == "2-connected":
        return {"blocks": [sorted(b) for b in cert.blocks]}
    if kind == "disconnected":
        return {"components": [sorted(c) for c in cert]}
    return {}


def cmd_check(args) -> int:
    tag = _target(args.cls, args.k)
    g = _read_graph(args.input, args.format)
    cert = certificate(g, tag)
    member = cert is not None
    print(json.dumps({"member": member, "certificate": certificate_json(tag, cert) if member else None}))
    print(f"{'member of' if member else 'not a member of'} {tag}", file=sys.stderr)
    return EXIT_OK if member else EXIT_ERROR


def cmd_gen(args) -> int:
    spec = GeneratorSpec(args.family, args.n, args.p, args.k, args.seed)
    text = write_edge_list(generate(spec)) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _parse_set(text: str) -> list[int]:
    items = [t.strip() for t in text.split(",") if t.strip()]
    try:
        return [int(t) for t in items]
    except ValueError:
        raise CliError(f"--set expects comma-separated vertex ids, got {text!r}") from None


def cmd_complement(args) -> int:
    g = _read_graph(args.input, args.format)
    if args.full:
        if args.set is not None:
            raise CliError("--set and --full are mutually exclusive")
        h = complement(g)
    else:
        h = subgraph_complement(g, _parse_set(args.set or ""))
    sys.stdout.write(write_edge_list(h) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="subcomp", description="Minimum subgraph complementation solvers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_input(p):
        p.add_argument("--input", required=True, help="graph file, or - for stdin")
        p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")

    p = sub.add_parser("solve", help="run the polynomial solver for a target class")
    p.add_argument("--target", required=True, choices=SOLVE_TARGETS)
    p.add_argument("--k", type=int)
    graph_input(p)
    p.add_argument("--weights", help="vertex weights (disconnected target only)")
    p.add_argument("--source", choices=SOURCES, default="auto")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="test class membership and print a certificate")
    p.add_argument("--class", dest="cls", required=True, choices=KINDS)
    p.add_argument("--k", type=int)
    graph_input(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="exhaustive search over all vertex subsets")
    p.add_argument("--target", required=True, choices=KINDS)
    p.add_argument("--k", type=int)
    graph_input(p)
    p.add_argument("--weights")
    p.add_argument("--cap", type=int, help=f"largest n searched (default {DEFAULT_CAP}, "
                                            f"{DEFAULT_WEIGHTED_CAP} for disconnected)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="generate a graph from a seeded family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("complement", help="print G ⊕ S, or the full complement")
    graph_input(p)
    p.add_argument("--set", help='comma-separated vertex ids, e.g. "0,1,2"')
    p.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_complement)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except VerificationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (CliError, ParseError, GraphError, GeneratorError, ResourceLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
