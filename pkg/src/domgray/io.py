"""Reading graphs and writing dominating graphs, paths, and traces.

Two graph formats are accepted: a plain edge list (one "u v" pair per line,
"#" comments and blank lines ignored, vertex count = max label + 1) and a
JSON document {"n": int, "edges": [[u, v], ...]}.
"""

from __future__ import annotations

import json
from typing import Sequence

from .graphs import DomGraph, Graph, VertexSet
from .reduction import ReductionTrace


class GraphParseError(ValueError):
    """Malformed graph or path file; carries a 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def parse_edge_list(text: str) -> Graph:
    edges = []
    max_label = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {raw!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex label in {raw!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError(f"negative vertex label in {raw!r}", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        edges.append((u, v))
        max_label = max(max_label, u, v)
    try:
        return Graph(max_label + 1, edges)
    except ValueError as e:
        raise GraphParseError(str(e)) from None


def parse_graph_json(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphParseError(f"invalid JSON: {e}", e.lineno) from None
    if not isinstance(doc, dict) or "n" not in doc:
        raise GraphParseError('JSON graph needs an "n" field')
    n = doc["n"]
    edges = doc.get("edges", [])
    if not isinstance(n, int) or not isinstance(edges, list):
        raise GraphParseError('"n" must be an integer and "edges" a list')
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphParseError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return Graph(n, pairs)
    except ValueError as e:
        raise GraphParseError(str(e)) from None


def parse_graph(text: str) -> Graph:
    """Sniff the format: a JSON document starts with '{'."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text)
    return parse_edge_list(text)


def load_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as f:
        return parse_graph(f.read())


# -- vertex sets and paths ---------------------------------------------------


def format_vertex_set(s: VertexSet, style: str = "bits") -> str:
    if style == "bits":
        return s.to_string()
    if style == "sets":
        return "{" + ",".join(str(v) for v in s.members()) + "}"
    raise ValueError(f"unknown style {style!r}")


def parse_vertex_set(token: str, width: int) -> VertexSet:
    token = token.strip()
    if token.startswith("{"):
        if not token.endswith("}"):
            raise ValueError(f"unterminated set literal {token!r}")
        body = token[1:-1].strip()
        members = [int(x) for x in body.split(",")] if body else []
        return VertexSet.from_members(members, width)
    s = VertexSet.from_string(token)
    if s.width != width:
        raise ValueError(f"expected a string of {width} bits, got {len(token)}")
    return s


def parse_path_file(text: str, width: int) -> list[VertexSet]:
    """One vertex set per line, binary-string or {a,b,c} style."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(parse_vertex_set(line, width))
        except ValueError as e:
            raise GraphParseError(str(e), lineno) from None
    return out


def path_lines(steps: Sequence[VertexSet], style: str = "bits") -> list[str]:
    return [format_vertex_set(s, style) for s in steps]


# -- dominating graph export -------------------------------------------------


def domgraph_to_dot(dg: DomGraph) -> str:
    lines = ["graph domgraph {"]
    for s in dg.nodes:
        lines.append(f'  "{s.to_string()}";')
    for i, j in dg.edges():
        lines.append(f'  "{dg.nodes[i].to_string()}" -- "{dg.nodes[j].to_string()}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def domgraph_to_json(dg: DomGraph) -> dict:
    return {
        "n": dg.host.n,
        "nodes": [s.to_string() for s in dg.nodes],
        "edges": [list(e) for e in dg.edges()],
    }


# -- reduction trace export --------------------------------------------------


def trace_to_json(trace: ReductionTrace) -> dict:
    steps = []
    for red, after in trace.steps:
        entry = {"kind": red.kind, "u": red.u, "v": red.v}
        if red.kind == "twin-leaf":
            entry["x"] = red.x
        else:
            entry["w"] = red.w
        entry["remaining"] = list(after.vertices())
        steps.append(entry)
    return {
        "start": list(trace.start.vertices()),
        "steps": steps,
        "base": list(trace.base.vertices()),
    }
