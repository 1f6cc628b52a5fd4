"""Local graph reductions that preserve Hamilton paths in dominating graphs.

Two moves are supported:

* twin-leaf: two degree-1 vertices u, v share the same sole neighbor x;
  delete v.
* pendant-pair: a degree-1 vertex w whose neighbor v has degree 2 with
  neighbors exactly {u, w}; delete both v and w.

Every tree on at least 3 vertices admits one of the two, so repeated
application reduces any tree to a 1- or 2-vertex base.  On a unicyclic
graph the same search, restricted to deletions that avoid the cycle,
either strips all pendant trees down to the cycle or reports the pendant
tree that blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Iterator, Union

from .errors import ConstructionError, NotReducibleError
from .graphs import Graph


@dataclass(frozen=True)
class TwinLeafReduction:
    """Delete leaf v, where u and v are leaves sharing the sole neighbor x."""

    u: int
    v: int
    x: int
    kind: ClassVar[str] = "twin-leaf"

    @property
    def deleted(self) -> tuple[int, ...]:
        return (self.v,)

    def validate(self, g: Graph) -> None:
        if len({self.u, self.v, self.x}) != 3:
            raise ValueError("twin-leaf reduction needs three distinct vertices")
        for leaf in (self.u, self.v):
            if g.neighbors_mask(leaf) != 1 << self.x:
                raise ValueError(
                    f"vertex {leaf} is not a leaf with sole neighbor {self.x}"
                )


@dataclass(frozen=True)
class PendantPairReduction:
    """Delete the pendant pair v, w: N(v) = {u, w} and N(w) = {v}."""

    u: int
    v: int
    w: int
    kind: ClassVar[str] = "pendant-pair"

    @property
    def deleted(self) -> tuple[int, ...]:
        return (self.v, self.w)

    def validate(self, g: Graph) -> None:
        if len({self.u, self.v, self.w}) != 3:
            raise ValueError("pendant-pair reduction needs three distinct vertices")
        if g.neighbors_mask(self.v) != (1 << self.u) | (1 << self.w):
            raise ValueError(f"vertex {self.v} must have neighbors exactly {{u, w}}")
        if g.neighbors_mask(self.w) != 1 << self.v:
            raise ValueError(f"vertex {self.w} must be a leaf hanging on {self.v}")


Reduction = Union[TwinLeafReduction, PendantPairReduction]


def apply_twin_leaf(g: Graph, r: TwinLeafReduction) -> Graph:
    r.validate(g)
    return g.delete(r.deleted)


def apply_pendant_pair(g: Graph, r: PendantPairReduction) -> Graph:
    r.validate(g)
    return g.delete(r.deleted)


def apply_reduction(g: Graph, r: Reduction) -> Graph:
    r.validate(g)
    return g.delete(r.deleted)


@dataclass(frozen=True)
class ReductionTrace:
    """A start graph and the reductions taking it down to a base graph."""

    start: Graph
    steps: tuple[tuple[Reduction, Graph], ...]

    @property
    def base(self) -> Graph:
        return self.steps[-1][1] if self.steps else self.start

    def lifts(self) -> Iterator[tuple[Reduction, Graph, Graph]]:
        """Yield (reduction, before, after) from the base back to the start."""
        before = [self.start] + [after for _, after in self.steps[:-1]]
        for (red, after), prev in zip(reversed(self.steps), reversed(before)):
            yield red, prev, after


def _depths_from(g: Graph, sources: Iterator[int]) -> dict[int, int]:
    depth = {v: 0 for v in sources}
    frontier = list(depth)
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            m = g.neighbors_mask(v)
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if u not in depth:
                    depth[u] = d
                    nxt.append(u)
        frontier = nxt
    return depth


def _deepest_leaf(g: Graph, depth: dict[int, int], candidates) -> int:
    leaves = [v for v in candidates if g.degree(v) == 1]
    return max(leaves, key=lambda v: (depth[v], -v))


def _reduction_at(g: Graph, leaf: int) -> Reduction:
    """Build the move that removes `leaf` (or a sibling leaf) at its support."""
    p = g.neighbors(leaf)[0]
    siblings = sorted(v for v in g.neighbors(p) if g.degree(v) == 1 and v != leaf)
    if siblings:
        a, b = sorted((leaf, siblings[0]))
        return TwinLeafReduction(u=a, v=b, x=p)
    if g.degree(p) != 2:
        raise ConstructionError(
            f"support {p} of deepest leaf {leaf} has degree {g.degree(p)}; "
            "expected a lone leaf on a degree-2 vertex"
        )
    other = next(v for v in g.neighbors(p) if v != leaf)
    return PendantPairReduction(u=other, v=p, w=leaf)


def find_reduction(t: Graph) -> Reduction:
    """A twin-leaf or pendant-pair move valid in the tree t.

    Deterministic rule: root at the smallest active label and pick the
    deepest leaf (smallest label on ties).  If its support has another
    leaf neighbor, remove the larger-labeled of the two leaves as a
    twin-leaf move; otherwise the support has degree 2 and the leaf comes
    off as a pendant pair.
    """
    if not t.is_tree():
        raise ValueError("find_reduction expects a tree")
    if t.active_count < 3:
        raise ValueError("find_reduction needs at least 3 active vertices")
    root = t.vertices()[0]
    depth = _depths_from(t, iter([root]))
    leaf = _deepest_leaf(t, depth, t.vertices())
    return _reduction_at(t, leaf)


def reduce_tree_to_base(t: Graph) -> ReductionTrace:
    """Reduce a tree to a 1- or 2-vertex base, recording every step."""
    if not t.is_tree():
        raise ValueError("reduce_tree_to_base expects a tree")
    steps = []
    g = t
    while g.active_count > 2:
        r = find_reduction(g)
        g = g.delete(r.deleted)
        steps.append((r, g))
    return ReductionTrace(start=t, steps=tuple(steps))


def cycle_vertices(g: Graph) -> tuple[int, ...]:
    """The unique cycle of a unicyclic graph, found by stripping leaves."""
    if not g.is_unicyclic():
        raise ValueError("expected a connected graph with exactly one cycle")
    deg = {v: g.degree(v) for v in g.vertices()}
    queue = [v for v, d in deg.items() if d == 1]
    while queue:
        v = queue.pop()
        deg[v] = 0
        m = g.neighbors_mask(v)
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if deg[u] > 1:
                deg[u] -= 1
                if deg[u] == 1:
                    queue.append(u)
    return tuple(v for v in g.vertices() if deg[v] >= 2)


def reduce_unicyclic(g: Graph) -> ReductionTrace:
    """Strip the pendant trees of a unicyclic graph down to its cycle.

    Uses the same deepest-leaf rule as the tree reducer, with depth
    measured from the cycle and any move that would delete a cycle vertex
    rejected.  Raises NotReducibleError when a pendant tree cannot come
    off without touching the cycle (a lone leaf on a cycle vertex).
    """
    cyc = set(cycle_vertices(g))
    steps = []
    cur = g
    while cur.active_count > len(cyc):
        depth = _depths_from(cur, iter(sorted(cyc)))
        leaf = _deepest_leaf(cur, depth, cur.vertices())
        p = cur.neighbors(leaf)[0]
        if p in cyc and depth[leaf] == 1:
            siblings = [v for v in cur.neighbors(p) if cur.degree(v) == 1 and v != leaf]
            if not siblings:
                pendant = [v for v in cur.vertices() if v not in cyc and _attachment(cur, v, cyc, depth) == p]
                raise NotReducibleError(p, pendant)
        r = _reduction_at(cur, leaf)
        if any(d in cyc for d in r.deleted):
            raise ConstructionError(f"reduction {r} would delete a cycle vertex")
        cur = cur.delete(r.deleted)
        steps.append((r, cur))
    return ReductionTrace(start=g, steps=tuple(steps))


def _attachment(g: Graph, v: int, cyc: set[int], depth: dict[int, int]) -> int:
    """The cycle vertex whose pendant tree contains v."""
    while v not in cyc:
        v = min(u for u in g.neighbors(v) if depth[u] == depth[v] - 1)
    return v
