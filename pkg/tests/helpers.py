"""Shared test helpers, including a deliberately naive reference oracle.

The naive enumerator below works on adjacency sets with itertools, sharing
no code with the package's bit-vector scan, so the two can check each
other.
"""

from __future__ import annotations

import random
from itertools import chain, combinations

from domgray import Graph, VertexSet


def naive_dominating_sets(g: Graph) -> list[frozenset[int]]:
    """Every dominating set of g, by trying all subsets of active vertices."""
    verts = list(g.vertices())
    nbrs = {v: set(g.neighbors(v)) for v in verts}
    out = []
    for r in range(len(verts) + 1):
        for combo in combinations(verts, r):
            s = set(combo)
            if all(v in s or nbrs[v] & s for v in verts):
                out.append(frozenset(s))
    return out


def to_vertex_sets(sets, width) -> set[VertexSet]:
    return {VertexSet.from_members(s, width) for s in sets}


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def connected_graphs_upto(n_max: int):
    """Every labeled graph on 1..n_max vertices whose edge set connects it."""
    for n in range(1, n_max + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = Graph(n, edges)
            if g.is_connected():
                yield g


def cycle_with_pendant_paths(m: int, attach_counts: int) -> Graph:
    """C_m with a 2-edge pendant path hung on the first attach_counts cycle vertices."""
    edges = [(i, (i + 1) % m) for i in range(m)]
    nxt = m
    for a in range(attach_counts):
        edges += [(a, nxt), (nxt, nxt + 1)]
        nxt += 2
    return Graph(nxt, edges)


def all_valid_reductions(t: Graph):
    """Every twin-leaf and pendant-pair move valid in t, deterministic order."""
    from domgray import PendantPairReduction, TwinLeafReduction

    out = []
    for x in t.vertices():
        leaves = [v for v in t.neighbors(x) if t.degree(v) == 1]
        out += [
            TwinLeafReduction(u=a, v=b, x=x)
            for a, b in combinations(sorted(leaves), 2)
        ]
    for v in t.vertices():
        if t.degree(v) != 2:
            continue
        a, b = t.neighbors(v)
        for u, w in ((a, b), (b, a)):
            if t.degree(w) == 1:
                out.append(PendantPairReduction(u=u, v=v, w=w))
    return out
