"""Command-line interface.

Exit codes: 0 success or verification pass, 1 verification failure,
2 non-existence, 3 unknown (budget ran out), 64 usage error, 65 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .composer import Unknown, hamilton_path_auto, hamilton_path_unicyclic, relabeled_cycle_path
from .cycles import MAX_CYCLE, NonExistence, hamilton_path_cycle
from .errors import BudgetExceededError, NotReducibleError
from .graphs import Graph, HamPath, build_dominating_graph, enumerate_dominating_sets
from .io import (
    GraphParseError,
    domgraph_to_dot,
    domgraph_to_json,
    format_vertex_set,
    load_graph,
    parse_path_file,
    path_lines,
    trace_to_json,
)
from .oracle import (
    DEFAULT_SEARCH_BUDGET,
    FOUND,
    NOT_EXISTS,
    brute_force_hamilton_path,
    parity_check,
    verify_hamilton_path,
)
from .reduction import reduce_tree_to_base, reduce_unicyclic
from .trees import hamilton_path_tree

EX_OK = 0
EX_VERIFY_FAIL = 1
EX_NONEXISTENT = 2
EX_UNKNOWN = 3
EX_USAGE = 64
EX_BAD_INPUT = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _build_parser() -> _Parser:
    p = _Parser(
        prog="domgray",
        description="Construct and verify Hamilton paths in dominating graphs.",
    )
    p.add_argument("--seed", type=int, help="reserved; accepted and ignored")
    sub = p.add_subparsers(dest="command", required=True)

    g = "graph file (edge list or JSON)"
    sp = sub.add_parser("enum", help="list all dominating sets, one per line")
    sp.add_argument("graph", help=g)
    sp.add_argument("--sets", action="store_true", help="print {a,b} instead of bit strings")

    sp = sub.add_parser("domgraph", help="export the dominating graph")
    sp.add_argument("graph", help=g)
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="DOT output (default)")
    fmt.add_argument("--json", action="store_true", help="JSON output")

    sp = sub.add_parser("path", help="construct a Hamilton path of the dominating graph")
    sp.add_argument("graph", help=g)
    sp.add_argument(
        "--method",
        choices=["auto", "tree", "cycle", "unicyclic", "oracle"],
        default="auto",
    )
    sp.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET,
                    help="node-expansion budget for the oracle search")
    sp.add_argument("--sets", action="store_true", help="print {a,b} instead of bit strings")

    sp = sub.add_parser("verify", help="check a path file against a graph")
    sp.add_argument("graph", help=g)
    sp.add_argument("pathfile", help="one vertex set per line")

    sp = sub.add_parser("parity", help="dominating-set count and parity classes")
    sp.add_argument("graph", help=g)

    sp = sub.add_parser("reduce", help="emit the reduction trace of a tree or unicyclic graph")
    sp.add_argument("graph", help=g)

    sp = sub.add_parser("cycle", help="Hamilton path for the n-cycle, straight from the Gray code")
    sp.add_argument("n", type=int)
    sp.add_argument("--sets", action="store_true", help="print {a,b} instead of bit strings")
    return p


def _emit_path(path: HamPath, style: str) -> None:
    for line in path_lines(path.steps, style):
        print(line)


def _cmd_enum(args) -> int:
    g = load_graph(args.graph)
    style = "sets" if args.sets else "bits"
    for s in enumerate_dominating_sets(g):
        print(format_vertex_set(s, style))
    return EX_OK


def _cmd_domgraph(args) -> int:
    g = load_graph(args.graph)
    dg = build_dominating_graph(g)
    if args.json:
        print(json.dumps(domgraph_to_json(dg), indent=2))
    else:
        sys.stdout.write(domgraph_to_dot(dg))
    return EX_OK


def _path_by_method(g: Graph, method: str, budget: int):
    if method == "auto":
        return hamilton_path_auto(g, search_budget=budget)
    if method == "tree":
        return hamilton_path_tree(g)
    if method == "cycle":
        if not g.is_cycle():
            raise GraphParseError("the graph is not a cycle")
        return relabeled_cycle_path(g)
    if method == "unicyclic":
        if not g.is_unicyclic():
            raise GraphParseError("the graph is not unicyclic")
        try:
            return hamilton_path_unicyclic(g)
        except (NotReducibleError, ValueError) as e:
            return Unknown(reason=str(e))
    if method == "oracle":
        dg = build_dominating_graph(g)
        result = brute_force_hamilton_path(dg, budget)
        if result.outcome == FOUND:
            return result.path
        if result.outcome == NOT_EXISTS:
            return NonExistence(reason="exhaustive search found no Hamilton path", certificate=result)
        return Unknown(reason=f"search budget exhausted after {result.explored} expansions")
    raise GraphParseError(f"unknown method {method}")


def _cmd_path(args) -> int:
    g = load_graph(args.graph)
    outcome = _path_by_method(g, args.method, args.budget)
    style = "sets" if args.sets else "bits"
    if isinstance(outcome, HamPath):
        _emit_path(outcome, style)
        return EX_OK
    if isinstance(outcome, NonExistence):
        print("NONEXISTENT")
        print(outcome.reason, file=sys.stderr)
        return EX_NONEXISTENT
    print("UNKNOWN")
    print(outcome.reason, file=sys.stderr)
    return EX_UNKNOWN


def _cmd_verify(args) -> int:
    g = load_graph(args.graph)
    with open(args.pathfile, encoding="utf-8") as f:
        steps = parse_path_file(f.read(), g.n)
    report = verify_hamilton_path(g, steps)
    print(report.summary())
    print(f"RESULT: {'PASS' if report.passed else 'FAIL'}")
    return EX_OK if report.passed else EX_VERIFY_FAIL


def _cmd_parity(args) -> int:
    g = load_graph(args.graph)
    report = parity_check(g)
    print(f"count={report.count}")
    print(f"odd={'true' if report.is_odd else 'false'}")
    print(f"class_even={report.even_class_size}")
    print(f"class_odd={report.odd_class_size}")
    return EX_OK


def _cmd_reduce(args) -> int:
    g = load_graph(args.graph)
    if g.is_tree():
        trace = reduce_tree_to_base(g)
    elif g.is_unicyclic():
        try:
            trace = reduce_unicyclic(g)
        except NotReducibleError as e:
            print(f"NOT-REDUCIBLE: {e}")
            return EX_NONEXISTENT
    else:
        raise GraphParseError("reduce expects a tree or a unicyclic graph")
    print(json.dumps(trace_to_json(trace), indent=2))
    return EX_OK


def _cmd_cycle(args) -> int:
    if not 3 <= args.n <= MAX_CYCLE:
        raise GraphParseError(f"cycle length must be in 3..{MAX_CYCLE}")
    outcome = hamilton_path_cycle(args.n)
    if isinstance(outcome, NonExistence):
        print("NONEXISTENT")
        print(outcome.reason, file=sys.stderr)
        return EX_NONEXISTENT
    _emit_path(outcome, "sets" if args.sets else "bits")
    return EX_OK


_COMMANDS = {
    "enum": _cmd_enum,
    "domgraph": _cmd_domgraph,
    "path": _cmd_path,
    "verify": _cmd_verify,
    "parity": _cmd_parity,
    "reduce": _cmd_reduce,
    "cycle": _cmd_cycle,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.seed is not None:
        print("warning: --seed is accepted but ignored (nothing is randomized)", file=sys.stderr)
    try:
        return _COMMANDS[args.command](args)
    except GraphParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EX_BAD_INPUT
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EX_BAD_INPUT
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EX_UNKNOWN
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EX_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
