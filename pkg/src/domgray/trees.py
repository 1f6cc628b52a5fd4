"""Hamilton paths in dominating graphs of trees.

A tree reduces to a 1- or 2-vertex base whose dominating graph is a
trivial path; lifting back through the reduction trace yields a Hamilton
path for the full tree.  Also holds the Pruefer-sequence helpers used to
enumerate and sample labeled trees.
"""

from __future__ import annotations

import heapq
import random
from itertools import product
from typing import Iterator, Sequence

from .graphs import DEFAULT_SET_BUDGET, Graph, HamPath, VertexSet
from .lifting import (
    PendantPairLift,
    TwinLeafLift,
    lift_pendant_pair,
    lift_twin_leaf,
)
from .reduction import TwinLeafReduction, reduce_tree_to_base


def base_path(g: Graph) -> HamPath:
    """The Hamilton path of the dominating graph of a 1- or 2-vertex graph."""
    verts = g.vertices()
    if len(verts) == 1:
        return HamPath([VertexSet.from_members(verts, g.n)])
    if len(verts) == 2 and g.has_edge(*verts):
        a, b = verts
        return HamPath(
            [
                VertexSet.from_members([a], g.n),
                VertexSet.from_members([a, b], g.n),
                VertexSet.from_members([b], g.n),
            ]
        )
    raise ValueError("base graph must be a single vertex or a single edge")


def hamilton_path_tree(t: Graph, budget: int = DEFAULT_SET_BUDGET) -> HamPath:
    """A Hamilton path of the dominating graph of the tree t.

    Deterministic: the reduction trace and every lift are tie-broken by
    label, so equal inputs give byte-equal paths.
    """
    if not t.is_tree():
        raise ValueError("hamilton_path_tree expects a tree")
    trace = reduce_tree_to_base(t)
    path = base_path(trace.base)
    for red, before, _after in trace.lifts():
        if isinstance(red, TwinLeafReduction):
            ctx = TwinLeafLift.from_reduction(before, red)
            path = lift_twin_leaf(path, ctx, check_input=False)
        else:
            ctx = PendantPairLift.from_reduction(before, red, budget)
            path = lift_pendant_pair(path, ctx, check_input=False)
    return path


# -- labeled-tree generation -------------------------------------------------


def prufer_to_tree(seq: Sequence[int], n: int | None = None) -> Graph:
    """Decode a Pruefer sequence over labels 0..n-1 into a labeled tree."""
    n = len(seq) + 2 if n is None else n
    if n < 2 or len(seq) != n - 2:
        raise ValueError("sequence length must be n - 2 with n >= 2")
    if any(not 0 <= s < n for s in seq):
        raise ValueError("sequence labels out of range")
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        degree[leaf] -= 1
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaves, s)
    a, b = (v for v in range(n) if degree[v] == 1)
    edges.append((a, b))
    return Graph(n, edges)


def all_labeled_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on n vertices, via Pruefer sequences."""
    if n == 1:
        yield Graph(1)
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_to_tree(seq, n)


def random_tree(n: int, rng: random.Random) -> Graph:
    """A uniformly random labeled tree on n vertices."""
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    return prufer_to_tree([rng.randrange(n) for _ in range(n - 2)], n)
