"""Command-line front end.

Graph files are line oriented:

    # comment
    vertex a            (optional; endpoints of edges are declared implicitly)
    edge e1 a b 2/3     (length defaults to 1; integers and p/q accepted)

Exact fractions are the primary output (first line, as num/den); a 12
significant digit decimal follows where that helps a human.  Exit codes:
0 ok, 1 verification failures, 2 parse error, 3 disconnected graph,
4 unknown vertex or edge, 5 violated hypothesis or bad parameters.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import resistnet, spantree, verify
from .graph import (
    DisconnectedError,
    GraphError,
    Multigraph,
    PreconditionError,
    UnknownEdgeError,
    UnknownVertexError,
)
from .reduction import reduce_two_terminal
from .resistnet import Network

EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_DISCONNECTED = 3
EXIT_UNKNOWN_ID = 4
EXIT_PRECONDITION = 5


class GraphFileError(ValueError):
    pass


def parse_graph_text(text: str) -> Multigraph:
    vertices = set()
    edges = []
    seen_ids = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "vertex":
            if len(parts) != 2:
                raise GraphFileError(f"line {lineno}: vertex takes one id")
            vertices.add(parts[1])
        elif kind == "edge":
            if len(parts) not in (4, 5):
                raise GraphFileError(
                    f"line {lineno}: edge takes id, two endpoints, optional length"
                )
            eid, u, v = parts[1:4]
            if eid in seen_ids:
                raise GraphFileError(f"line {lineno}: duplicate edge id {eid}")
            seen_ids.add(eid)
            length = Fraction(1)
            if len(parts) == 5:
                try:
                    length = Fraction(parts[4])
                except (ValueError, ZeroDivisionError) as exc:
                    raise GraphFileError(
                        f"line {lineno}: bad length {parts[4]!r}"
                    ) from exc
                if length <= 0:
                    raise GraphFileError(f"line {lineno}: length must be positive")
            vertices.update((u, v))
            edges.append((eid, u, v, length))
        else:
            raise GraphFileError(f"line {lineno}: unknown directive {kind!r}")
    if not vertices:
        raise GraphFileError("graph file declares no vertices")
    return Multigraph(vertices, edges)


def load_graph(path: str) -> Multigraph:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphFileError(f"cannot read {path}: {exc}") from exc
    return parse_graph_text(text)


def _print_fraction(x: Fraction) -> None:
    print(f"{x.numerator}/{x.denominator}")
    print(f"{x.numerator / x.denominator:.12g}")


def cmd_resistance(args) -> int:
    net = Network(load_graph(args.file))
    _print_fraction(net.resistance(args.p, args.q))
    return 0


def cmd_voltage(args) -> int:
    net = Network(load_graph(args.file))
    _print_fraction(net.voltage(args.z, args.x, args.y))
    return 0


def cmd_spantree(args) -> int:
    g = load_graph(args.file)
    if args.method == "matrix":
        t = spantree.count_matrix_tree(g)
    elif args.method == "dc":
        t = spantree.count_deletion_contraction(g)
    elif args.method == "enum":
        t = spantree.count_enumeration(g)
    else:  # vertex-del
        candidates = [
            u
            for u in g.sorted_vertices()
            if g.n >= 2 and g.delete_vertex(u).is_connected()
        ]
        if not candidates:
            raise PreconditionError("no removable non-cut vertex available")
        t, _ = spantree.vertex_deletion_count(g, candidates[0])
    print(t)
    return 0


def cmd_identify(args) -> int:
    g = load_graph(args.file)
    groups = [grp.split(",") for grp in args.group]
    merged, _ = g.identify(groups)
    sys.stdout.write(merged.canonical_text())
    return 0


def cmd_euler(args) -> int:
    net = Network(load_graph(args.file))
    if args.form == "I":
        terms = resistnet.euler_decomposition(net, args.s, args.t)
    else:
        terms = resistnet.euler_decomposition_resistance_only(net, args.s, args.t)
    total = Fraction(0)
    for term in terms:
        c = term.contribution
        print(f"{term.edge} {term.kind} {c.numerator}/{c.denominator}")
        total += c
    print(f"total {total.numerator}/{total.denominator}")
    return 0


def cmd_derivative(args) -> int:
    net = Network(load_graph(args.file))
    _print_fraction(resistnet.resistance_derivative(net, args.edge, args.s, args.t))
    return 0


def cmd_reduce(args) -> int:
    g = load_graph(args.file)
    value, trace = reduce_two_terminal(g, args.s, args.t)
    if value is None:
        print("not-reducible")
    else:
        print(f"{value.numerator}/{value.denominator}")
    sys.stdout.write(trace.text())
    return 0


def cmd_closed_form(args) -> int:
    print(spantree.closed_form(args.family, args.n, args.a))
    return 0


def cmd_verify(args) -> int:
    tags = args.tags.split(",") if args.tags else list(verify.ALL_TAGS)
    spec = verify.GraphGenSpec(seed=args.seed)
    result = verify.run_suite(
        spec,
        tags,
        instances=args.count,
        samples=args.samples,
        exhaustive=args.exhaustive,
    )
    for report in result.reports:
        print(report.line())
    failures = sum(1 for r in result.reports if not r.passed)
    skipped = {t: n for t, n in result.skipped.items() if n}
    print(
        f"checked {len(result.reports)} identities, {failures} failures, "
        f"skipped selections: {skipped or 'none'}",
        file=sys.stderr,
    )
    return EXIT_FAIL if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ohmtree",
        description="Exact resistance, voltage, and spanning-tree computations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resistance", help="effective resistance between two vertices")
    p.add_argument("file")
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(func=cmd_resistance)

    p = sub.add_parser("voltage", help="voltage j_z(x, y)")
    p.add_argument("file")
    p.add_argument("z")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_voltage)

    p = sub.add_parser("spantree", help="number of spanning trees")
    p.add_argument("file")
    p.add_argument(
        "--method",
        choices=("matrix", "dc", "enum", "vertex-del"),
        default="matrix",
    )
    p.set_defaults(func=cmd_spantree)

    p = sub.add_parser("identify", help="identify vertex groups, print the graph")
    p.add_argument("file")
    p.add_argument(
        "--group",
        action="append",
        required=True,
        help="comma-separated vertices to merge; repeatable",
    )
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("euler", help="per-edge split of the resistance")
    p.add_argument("file")
    p.add_argument("s")
    p.add_argument("t")
    p.add_argument("--form", choices=("I", "II"), default="I")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("derivative", help="derivative of r(s,t) in an edge length")
    p.add_argument("file")
    p.add_argument("edge")
    p.add_argument("s")
    p.add_argument("t")
    p.set_defaults(func=cmd_derivative)

    p = sub.add_parser("reduce", help="series/parallel/delta-wye reduction")
    p.add_argument("file")
    p.add_argument("s")
    p.add_argument("t")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("closed-form", help="closed-form spanning-tree counts")
    p.add_argument("family", choices=("path", "cycle", "banana", "complete", "fan", "wheel"))
    p.add_argument("n", type=int)
    p.add_argument("a", type=int, nargs="?", default=1)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("verify", help="run the seeded identity suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20, help="instances to generate")
    p.add_argument("--samples", type=int, default=6, help="selections per instance")
    p.add_argument("--tags", default="", help="comma-separated tags (default: all)")
    p.add_argument("--exhaustive", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DisconnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except (UnknownVertexError, UnknownEdgeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_ID
    except (PreconditionError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
