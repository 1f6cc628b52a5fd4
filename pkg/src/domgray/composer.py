"""Route a graph to the construction that fits it, or to brute force.

Trees and cycles get their direct constructions.  A unicyclic graph whose
pendant trees strip off cleanly is reduced to its cycle and the cycle path
is lifted back out.  Everything else (and the cases the constructions
leave open) goes to the bounded exhaustive search, which may come back
with a path, a certified non-existence, or an honest Unknown.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycles import NonExistence, hamilton_path_cycle
from .errors import BudgetExceededError, NotReducibleError
from .graphs import (
    DEFAULT_SET_BUDGET,
    Graph,
    HamPath,
    VertexSet,
    build_dominating_graph,
)
from .lifting import PendantPairLift, TwinLeafLift, lift_pendant_pair, lift_twin_leaf
from .oracle import (
    BUDGET_EXCEEDED,
    DEFAULT_SEARCH_BUDGET,
    FOUND,
    brute_force_hamilton_path,
)
from .reduction import TwinLeafReduction, cycle_vertices, reduce_unicyclic
from .trees import hamilton_path_tree


@dataclass(frozen=True)
class Unknown:
    """The search budget ran out before the question was settled."""

    reason: str


Outcome = HamPath | NonExistence | Unknown


def cycle_order(g: Graph) -> tuple[int, ...]:
    """The cycle's vertices in walk order, smallest label first.

    Starts at the smallest cycle vertex and walks toward its smaller
    neighbor on the cycle, so the order is deterministic.
    """
    cyc = set(cycle_vertices(g))
    start = min(cyc)
    second = min(v for v in g.neighbors(start) if v in cyc)
    order = [start, second]
    while True:
        prev, cur = order[-2], order[-1]
        nxt = next(v for v in g.neighbors(cur) if v in cyc and v != prev)
        if nxt == start:
            return tuple(order)
        order.append(nxt)


def relabeled_cycle_path(g: Graph) -> HamPath | NonExistence:
    """Hamilton path for a graph that is a cycle under any labeling."""
    if not g.is_cycle():
        raise ValueError("expected a cycle")
    order = cycle_order(g)
    raw = hamilton_path_cycle(len(order))
    if isinstance(raw, NonExistence):
        return raw
    return HamPath(
        VertexSet.from_members((order[j] for j in s.members()), g.n) for s in raw
    )


def hamilton_path_unicyclic(g: Graph, set_budget: int = DEFAULT_SET_BUDGET) -> HamPath:
    """Reduce a unicyclic graph to its cycle, then lift the cycle path back.

    Raises NotReducibleError when a pendant tree blocks the reduction, and
    ValueError when the cycle length is divisible by 4: in both cases this
    route proves nothing (existence only transfers from a path on the
    base), so callers should fall back to the search.
    """
    trace = reduce_unicyclic(g)
    base = trace.base
    if base.active_count % 4 == 0:
        raise ValueError(
            f"cycle length {base.active_count} is divisible by 4; "
            "the reduction route cannot settle existence"
        )
    path = relabeled_cycle_path(base)
    assert isinstance(path, HamPath)
    for red, before, _after in trace.lifts():
        if isinstance(red, TwinLeafReduction):
            path = lift_twin_leaf(path, TwinLeafLift.from_reduction(before, red), check_input=False)
        else:
            path = lift_pendant_pair(
                path, PendantPairLift.from_reduction(before, red, set_budget), check_input=False
            )
    return path


def hamilton_path_auto(
    g: Graph,
    *,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
    set_budget: int = DEFAULT_SET_BUDGET,
) -> Outcome:
    """Hamilton path of the dominating graph of g, by whatever route applies."""
    if g.active_count == 0:
        return HamPath([VertexSet(0, g.n)])
    if g.is_tree():
        return hamilton_path_tree(g, set_budget)
    if g.is_cycle():
        return relabeled_cycle_path(g)
    if g.is_unicyclic():
        try:
            return hamilton_path_unicyclic(g, set_budget)
        except (NotReducibleError, ValueError):
            pass
    return _oracle_path(g, search_budget, set_budget)


def _oracle_path(g: Graph, search_budget: int, set_budget: int) -> Outcome:
    try:
        dg = build_dominating_graph(g, set_budget)
    except BudgetExceededError as e:
        return Unknown(reason=f"dominating-set enumeration over budget: {e}")
    result = brute_force_hamilton_path(dg, search_budget)
    if result.outcome == FOUND:
        return result.path
    if result.outcome == BUDGET_EXCEEDED:
        return Unknown(
            reason=f"search budget exhausted after {result.explored} expansions"
        )
    return NonExistence(
        reason=f"exhaustive search over {len(dg)} dominating sets found no Hamilton path",
        certificate=result,
    )
