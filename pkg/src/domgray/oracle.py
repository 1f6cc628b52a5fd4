"""Ground truth: path verification, exhaustive search, and parity checks.

Everything here is independent of the constructive pipelines so it can
catch their bugs: verification re-checks domination set by set, and the
search enumerates rather than constructs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graphs import (
    DEFAULT_SET_BUDGET,
    DomGraph,
    Graph,
    HamPath,
    VertexSet,
    dominating_set_bits,
    is_dominating,
)

DEFAULT_SEARCH_BUDGET = 10**8

FOUND = "found"
NOT_EXISTS = "not-exists"
BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class VerificationReport:
    """Four independent checks on a claimed Hamilton path of a dominating graph."""

    all_dominating: bool
    all_distinct: bool
    unit_steps: bool
    count_matches: bool
    expected_count: int
    actual_count: int
    first_non_dominating: int | None = None
    first_repeat: int | None = None
    first_bad_step: int | None = None

    @property
    def passed(self) -> bool:
        return (
            self.all_dominating
            and self.all_distinct
            and self.unit_steps
            and self.count_matches
        )

    def summary(self) -> str:
        bits = []
        bits.append("dominating=ok" if self.all_dominating
                    else f"dominating=FAIL at step {self.first_non_dominating}")
        bits.append("distinct=ok" if self.all_distinct
                    else f"distinct=FAIL at step {self.first_repeat}")
        bits.append("unit-steps=ok" if self.unit_steps
                    else f"unit-steps=FAIL between steps {self.first_bad_step} and {self.first_bad_step + 1}")
        bits.append(f"count=ok ({self.actual_count})" if self.count_matches
                    else f"count=FAIL expected {self.expected_count} got {self.actual_count}")
        return ", ".join(bits)


def verify_hamilton_path(
    g: Graph,
    path: HamPath | Sequence[VertexSet],
    budget: int = DEFAULT_SET_BUDGET,
) -> VerificationReport:
    """Check a claimed Hamilton path of the dominating graph of g.

    The four checks are independent: every step dominates g, no step
    repeats, consecutive steps differ in exactly one vertex, and the step
    count equals the number of dominating sets of g.  Failures land in the
    report; nothing raises on a bad path.
    """
    steps = list(path)
    all_dom, first_bad = True, None
    for i, s in enumerate(steps):
        ok = False
        if s.width == g.n and s.bits & ~g.active_mask == 0:
            ok = is_dominating(g, s)
        if not ok:
            all_dom, first_bad = False, i
            break

    seen = {}
    distinct, first_repeat = True, None
    for i, s in enumerate(steps):
        key = (s.bits, s.width)
        if key in seen:
            distinct, first_repeat = False, i
            break
        seen[key] = i

    unit, first_bad_step = True, None
    for i in range(len(steps) - 1):
        if (steps[i].bits ^ steps[i + 1].bits).bit_count() != 1 or steps[i].width != steps[i + 1].width:
            unit, first_bad_step = False, i
            break

    expected = len(dominating_set_bits(g, budget))
    return VerificationReport(
        all_dominating=all_dom,
        all_distinct=distinct,
        unit_steps=unit,
        count_matches=len(steps) == expected,
        expected_count=expected,
        actual_count=len(steps),
        first_non_dominating=first_bad,
        first_repeat=first_repeat,
        first_bad_step=first_bad_step,
    )


@dataclass(frozen=True)
class SearchResult:
    outcome: str  # FOUND, NOT_EXISTS or BUDGET_EXCEEDED
    path: HamPath | None
    explored: int
    note: str = ""


def brute_force_hamilton_path(
    dg: DomGraph,
    budget: int = DEFAULT_SEARCH_BUDGET,
    *,
    prune: bool = True,
) -> SearchResult:
    """Exhaustive depth-first search for a Hamilton path of a dominating graph.

    With prune=True the search uses the bipartite parity classes: class
    sizes differing by more than one rule a path out immediately, and when
    they differ by exactly one both endpoints must lie in the larger
    class, so only those nodes are tried as starts.  NOT_EXISTS is
    returned only after the (soundly restricted) space is exhausted.
    """
    total = len(dg)
    node_bits = [s.bits for s in dg.nodes]
    nbrs = [dg.neighbor_indices(i) for i in range(total)]

    starts = range(total)
    note = ""
    if prune:
        odd_class = [i for i, b in enumerate(node_bits) if b.bit_count() % 2]
        even_class = [i for i in range(total) if not node_bits[i].bit_count() % 2]
        big, small = max(odd_class, even_class, key=len), min(even_class, odd_class, key=len)
        if len(big) - len(small) > 1:
            return SearchResult(
                NOT_EXISTS, None, 0,
                note=f"parity classes of sizes {len(big)} and {len(small)} forbid a Hamilton path",
            )
        starts = big if len(big) == len(small) + 1 else even_class
        note = "endpoints restricted to the larger parity class" if len(big) != len(small) else ""

    explored = 0
    for start in starts:
        path = [start]
        visited = 1 << start
        iters = [iter(nbrs[start])]
        explored += 1
        if explored > budget:
            return SearchResult(BUDGET_EXCEEDED, None, explored)
        if total == 1:
            return SearchResult(FOUND, HamPath([dg.nodes[start]]), explored)
        while iters:
            nxt = next(iters[-1], None)
            if nxt is None:
                iters.pop()
                visited &= ~(1 << path.pop())
                continue
            if visited >> nxt & 1:
                continue
            explored += 1
            if explored > budget:
                return SearchResult(BUDGET_EXCEEDED, None, explored)
            path.append(nxt)
            visited |= 1 << nxt
            if len(path) == total:
                return SearchResult(
                    FOUND, HamPath(dg.nodes[i] for i in path), explored
                )
            iters.append(iter(nbrs[nxt]))
    return SearchResult(NOT_EXISTS, None, explored, note=note)


@dataclass(frozen=True)
class ParityReport:
    count: int
    is_odd: bool
    even_class_size: int
    odd_class_size: int

    @property
    def classes_unequal(self) -> bool:
        return self.even_class_size != self.odd_class_size


def parity_check(g: Graph, budget: int = DEFAULT_SET_BUDGET) -> ParityReport:
    """Count dominating sets and split them by cardinality parity.

    The count of dominating sets of any finite graph is odd, so the two
    parity classes can never tie, which is exactly why no dominating
    graph has a Hamilton cycle.
    """
    bits = dominating_set_bits(g, budget)
    odd = int((np.bitwise_count(bits.astype(np.uint64)) & 1).sum())
    count = len(bits)
    return ParityReport(
        count=count,
        is_odd=count % 2 == 1,
        even_class_size=count - odd,
        odd_class_size=odd,
    )
