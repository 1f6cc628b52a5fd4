"""Bit-vector vertex sets, labeled graphs, and dominating-set machinery.

Vertex labels are integers 0..n-1 and map to machine bits, so a vertex set
is a plain integer under the hood.  Deleting a vertex deactivates its label
instead of renumbering; sets over a reduced graph are therefore valid bit
vectors over the original label space, which is what the path-lifting
constructions rely on.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import BudgetExceededError

MAX_VERTICES = 30
DEFAULT_SET_BUDGET = 1 << 22

# below this many active vertices a plain Python scan beats numpy call overhead
_NUMPY_CUTOFF = 11
_CHUNK = 1 << 20


class VertexSet:
    """An immutable subset of vertex labels 0..width-1 stored as a bit vector.

    Bit i is set iff vertex i is in the set.  Rendered as the binary string
    x_0 x_1 ... x_{n-1} with x_0 leftmost.  Ordering compares the underlying
    integer, in which vertex i has weight 2**i.
    """

    __slots__ = ("bits", "width")

    def __init__(self, bits: int, width: int):
        if not 0 <= width <= MAX_VERTICES:
            raise ValueError(f"width must be in 0..{MAX_VERTICES}, got {width}")
        if bits < 0 or bits >> width:
            raise ValueError(f"bits {bits:#x} out of range for width {width}")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "width", width)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def from_members(cls, members: Iterable[int], width: int) -> "VertexSet":
        bits = 0
        for v in members:
            if not 0 <= v < width:
                raise ValueError(f"vertex {v} out of range for width {width}")
            bits |= 1 << v
        return cls(bits, width)

    @classmethod
    def from_string(cls, s: str) -> "VertexSet":
        """Parse a binary string x_0...x_{n-1}, x_0 leftmost."""
        if not s or any(c not in "01" for c in s):
            raise ValueError(f"not a binary string: {s!r}")
        return cls(int(s[::-1], 2), len(s))

    def to_string(self) -> str:
        return format(self.bits, f"0{self.width}b")[::-1] if self.width else ""

    def members(self) -> tuple[int, ...]:
        b = self.bits
        return tuple(i for i in range(self.width) if b >> i & 1)

    def with_vertex(self, v: int) -> "VertexSet":
        return VertexSet(self.bits | (1 << v), self.width)

    def without_vertex(self, v: int) -> "VertexSet":
        return VertexSet(self.bits & ~(1 << v), self.width)

    def hamming(self, other: "VertexSet") -> int:
        return (self.bits ^ other.bits).bit_count()

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.width and self.bits >> v & 1 == 1

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.bits == other.bits
            and self.width == other.width
        )

    def __hash__(self) -> int:
        return hash((self.bits, self.width))

    def __lt__(self, other: "VertexSet") -> bool:
        return (self.width, self.bits) < (other.width, other.bits)

    def __repr__(self) -> str:
        return f"VertexSet('{self.to_string()}')"


class Graph:
    """A simple undirected graph on labels 0..n-1 with an explicit active set.

    Adjacency is stored as one neighborhood bit mask per label.  Labels of
    deleted vertices stay reserved (inactive) and are never reused.
    """

    __slots__ = ("n", "_adj", "_active")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", tuple(adj))
        object.__setattr__(self, "_active", (1 << n) - 1)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def _raw(cls, n: int, adj: tuple[int, ...], active: int) -> "Graph":
        g = cls.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "_adj", adj)
        object.__setattr__(g, "_active", active)
        return g

    # -- vertex queries ----------------------------------------------------

    @property
    def active_mask(self) -> int:
        return self._active

    def is_active(self, v: int) -> bool:
        return 0 <= v < self.n and self._active >> v & 1 == 1

    def vertices(self) -> tuple[int, ...]:
        a = self._active
        return tuple(v for v in range(self.n) if a >> v & 1)

    @property
    def active_count(self) -> int:
        return self._active.bit_count()

    def neighbors_mask(self, v: int) -> int:
        self._check_active(v)
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        m = self.neighbors_mask(v)
        return tuple(u for u in range(self.n) if m >> u & 1)

    def degree(self, v: int) -> int:
        return self.neighbors_mask(v).bit_count()

    def closed_neighborhood_mask(self, v: int) -> int:
        return self.neighbors_mask(v) | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return self.neighbors_mask(u) >> v & 1 == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in self.vertices():
            m = self._adj[u]
            for v in range(u + 1, self.n):
                if m >> v & 1:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in self.vertices()) // 2

    def _check_active(self, v: int) -> None:
        if not self.is_active(v):
            raise ValueError(f"vertex {v} is not an active vertex")

    # -- structure ----------------------------------------------------------

    def delete(self, vertices: Iterable[int]) -> "Graph":
        """Deactivate the given vertices, keeping all labels stable."""
        gone = 0
        for v in vertices:
            self._check_active(v)
            gone |= 1 << v
        active = self._active & ~gone
        adj = tuple(
            self._adj[v] & active if active >> v & 1 else 0 for v in range(self.n)
        )
        return Graph._raw(self.n, adj, active)

    def is_connected(self) -> bool:
        verts = self.vertices()
        if not verts:
            return True
        seen = 1 << verts[0]
        frontier = seen
        while frontier:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= self._adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == self._active

    def is_tree(self) -> bool:
        return self.active_count >= 1 and self.is_connected() and (
            self.edge_count() == self.active_count - 1
        )

    def is_unicyclic(self) -> bool:
        return self.is_connected() and self.edge_count() == self.active_count >= 3

    def is_cycle(self) -> bool:
        return self.is_unicyclic() and all(self.degree(v) == 2 for v in self.vertices())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._active == other._active
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._active, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, active={list(self.vertices())}, edges={list(self.edges())})"


# -- standard graphs -------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# -- dominating sets --------------------------------------------------------


def is_dominating(g: Graph, s: VertexSet) -> bool:
    """True iff every active vertex outside s has a neighbor in s."""
    if s.width != g.n:
        raise ValueError(f"set width {s.width} does not match graph size {g.n}")
    if s.bits & ~g.active_mask:
        raise ValueError("set contains inactive vertices")
    cover = s.bits
    m = s.bits
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        cover |= g._adj[v]
    return g.active_mask & ~cover == 0


def _deposit_positions(values: np.ndarray, positions: Sequence[int]) -> np.ndarray:
    """Spread the low bits of each value onto the given bit positions."""
    out = np.zeros_like(values)
    for j, p in enumerate(positions):
        out |= ((values >> j) & 1) << p
    return out


def dominating_set_bits(g: Graph, budget: int = DEFAULT_SET_BUDGET) -> np.ndarray:
    """All dominating sets of g as a sorted int64 array of bit vectors.

    The scan covers every subset of the active vertices; the budget bounds
    the number of *results*, not the scan.
    """
    active = g.vertices()
    a = len(active)
    if a == 0:
        return np.zeros(1, dtype=np.int64)
    closed = [g._adj[v] | (1 << v) for v in active]

    if a < _NUMPY_CUTOFF:
        found = [
            s
            for s in (
                _deposit_int(k, active) if active[-1] != a - 1 else k
                for k in range(1 << a)
            )
            if all(s & cn for cn in closed)
        ]
        if len(found) > budget:
            raise BudgetExceededError(
                f"{len(found)} dominating sets exceed budget {budget}",
                spent=len(found), budget=budget,
            )
        return np.asarray(found, dtype=np.int64)

    identity = active == tuple(range(a))
    parts = []
    total = 0
    for lo in range(0, 1 << a, _CHUNK):
        k = np.arange(lo, min(lo + _CHUNK, 1 << a), dtype=np.int64)
        subs = k if identity else _deposit_positions(k, active)
        valid = np.ones(len(subs), dtype=bool)
        for cn in closed:
            valid &= (subs & cn) != 0
        hit = subs[valid]
        total += len(hit)
        if total > budget:
            raise BudgetExceededError(
                f"more than {budget} dominating sets", spent=total, budget=budget
            )
        parts.append(hit)
    return parts[0] if len(parts) == 1 else np.concatenate(parts)


def _deposit_int(k: int, positions: Sequence[int]) -> int:
    out = 0
    for j, p in enumerate(positions):
        out |= (k >> j & 1) << p
    return out


def enumerate_dominating_sets(
    g: Graph, budget: int = DEFAULT_SET_BUDGET
) -> list[VertexSet]:
    """Every dominating set of g exactly once, ascending by bit-vector value."""
    n = g.n
    return [VertexSet(int(b), n) for b in dominating_set_bits(g, budget)]


class HamPath:
    """An ordered sequence of vertex sets, each one token move from the next.

    Construction rejects repeated sets and steps that change more than one
    vertex; whether the sequence covers *all* dominating sets of a graph is
    the oracle's job to check.
    """

    __slots__ = ("steps",)

    def __init__(self, steps: Iterable[VertexSet]):
        steps = tuple(steps)
        if not steps:
            raise ValueError("a path needs at least one set")
        width = steps[0].width
        seen = set()
        prev = None
        for i, s in enumerate(steps):
            if s.width != width:
                raise ValueError(f"step {i} has width {s.width}, expected {width}")
            if s.bits in seen:
                raise ValueError(f"step {i} repeats {s.to_string()}")
            seen.add(s.bits)
            if prev is not None and (prev ^ s.bits).bit_count() != 1:
                raise ValueError(f"steps {i - 1} and {i} differ in more than one vertex")
            prev = s.bits
        object.__setattr__(self, "steps", steps)

    def __setattr__(self, name, value):
        raise AttributeError("HamPath is immutable")

    @property
    def width(self) -> int:
        return self.steps[0].width

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, HamPath) and self.steps == other.steps

    def __hash__(self) -> int:
        return hash(self.steps)

    def __repr__(self) -> str:
        return f"HamPath({len(self.steps)} steps, width={self.width})"


class DomGraph:
    """The dominating graph of a host graph, with every node materialized.

    Nodes are all dominating sets of the host in ascending bit-vector order;
    two nodes are adjacent iff they differ in exactly one vertex.
    """

    __slots__ = ("host", "nodes", "_index")

    def __init__(self, host: Graph, nodes: Sequence[VertexSet]):
        object.__setattr__(self, "host", host)
        object.__setattr__(self, "nodes", tuple(nodes))
        object.__setattr__(self, "_index", {s.bits: i for i, s in enumerate(nodes)})

    def __setattr__(self, name, value):
        raise AttributeError("DomGraph is immutable")

    def __len__(self) -> int:
        return len(self.nodes)

    def index_of(self, s: VertexSet) -> int:
        try:
            return self._index[s.bits]
        except KeyError:
            raise ValueError(f"{s.to_string()} is not a dominating set of the host") from None

    def __contains__(self, s: VertexSet) -> bool:
        return isinstance(s, VertexSet) and s.bits in self._index

    def adjacent(self, a: VertexSet, b: VertexSet) -> bool:
        self.index_of(a)
        self.index_of(b)
        return a.hamming(b) == 1

    def neighbors(self, s: VertexSet) -> list[VertexSet]:
        """Nodes one token move away from s, ascending."""
        self.index_of(s)
        out = []
        for v in self.host.vertices():
            t = s.bits ^ (1 << v)
            if t in self._index:
                out.append(self.nodes[self._index[t]])
        out.sort()
        return out

    def neighbor_indices(self, i: int) -> list[int]:
        bits = self.nodes[i].bits
        out = [
            self._index[t]
            for v in self.host.vertices()
            if (t := bits ^ (1 << v)) in self._index
        ]
        out.sort()
        return out

    def edges(self) -> Iterator[tuple[int, int]]:
        """Index pairs (i, j), i < j, in deterministic order."""
        for i in range(len(self.nodes)):
            for j in self.neighbor_indices(i):
                if j > i:
                    yield (i, j)

    def edge_count(self) -> int:
        return sum(1 for _ in self.edges())

    def parity_class_sizes(self) -> tuple[int, int]:
        """Sizes of the even- and odd-cardinality node classes."""
        odd = sum(1 for s in self.nodes if len(s) % 2)
        return len(self.nodes) - odd, odd


def build_dominating_graph(g: Graph, budget: int = DEFAULT_SET_BUDGET) -> DomGraph:
    nodes = enumerate_dominating_sets(g, budget)
    # dominating-set counts are always odd; a miscount here is a bug
    assert len(nodes) % 2 == 1
    return DomGraph(g, nodes)
