"""Grow a Hamilton path of a reduced graph's dominating graph back up.

Each reduction move has a matching lift.  Given a Hamilton path over the
dominating sets of the reduced graph H', the lift produces one over the
original graph H by re-adding the deleted vertices to every step and
splicing in the dominating sets that only exist in H.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConstructionError
from .graphs import (
    DEFAULT_SET_BUDGET,
    Graph,
    HamPath,
    VertexSet,
    enumerate_dominating_sets,
    is_dominating,
)
from .reduction import PendantPairReduction, TwinLeafReduction

_CLASS_PLAIN = 0   # contains x, not u: the sets that get expanded
_CLASS_BOTH = 1    # contains x and u
_CLASS_OTHER = 2   # contains u, not x


@dataclass(frozen=True)
class TwinLeafLift:
    """Context for lifting over a twin-leaf deletion.

    host is the graph *before* the deletion; u and v are the twin leaves
    (v deleted), x their common support.  Every dominating set of the
    reduced graph contains x or u, which drives a three-way classification
    of path steps.
    """

    host: Graph
    u: int
    v: int
    x: int

    def __post_init__(self):
        TwinLeafReduction(u=self.u, v=self.v, x=self.x).validate(self.host)

    @classmethod
    def from_reduction(cls, host: Graph, r: TwinLeafReduction) -> "TwinLeafLift":
        return cls(host=host, u=r.u, v=r.v, x=r.x)

    def classify(self, bits: int) -> int:
        has_x = bits >> self.x & 1
        has_u = bits >> self.u & 1
        if has_x:
            return _CLASS_BOTH if has_u else _CLASS_PLAIN
        if has_u:
            return _CLASS_OTHER
        raise ValueError(
            "path step contains neither the support nor the kept leaf; "
            "it cannot dominate the reduced graph"
        )


@dataclass(frozen=True)
class PendantPairLift:
    """Context for lifting over a pendant-pair deletion.

    detours holds the dominating sets of H'-u that avoid u's closed
    neighborhood in H'; each one contributes a two-step detour spliced
    next to the step it extends.
    """

    host: Graph
    u: int
    v: int
    w: int
    detours: tuple[VertexSet, ...] = field(default=())

    def __post_init__(self):
        PendantPairReduction(u=self.u, v=self.v, w=self.w).validate(self.host)
        reduced = self.host.delete((self.v, self.w))
        forbidden = reduced.closed_neighborhood_mask(self.u)
        minus_u = reduced.delete([self.u])
        for s in self.detours:
            if s.bits & forbidden or not is_dominating(minus_u, s):
                raise ValueError(f"{s!r} is not a valid detour set for u={self.u}")

    @classmethod
    def from_reduction(
        cls,
        host: Graph,
        r: PendantPairReduction,
        budget: int = DEFAULT_SET_BUDGET,
    ) -> "PendantPairLift":
        reduced = host.delete(r.deleted)
        return cls(
            host=host,
            u=r.u,
            v=r.v,
            w=r.w,
            detours=tuple(detour_sets(reduced, r.u, budget)),
        )


def detour_sets(g: Graph, u: int, budget: int = DEFAULT_SET_BUDGET) -> list[VertexSet]:
    """Dominating sets of g-u that avoid the closed neighborhood of u in g.

    These are exactly the sets that stop dominating g once u must be
    covered; adding u to any of them dominates g again.
    """
    forbidden = g.closed_neighborhood_mask(u)
    without_u = g.delete([u])
    return [
        s for s in enumerate_dominating_sets(without_u, budget)
        if s.bits & forbidden == 0
    ]


def _checked_input(path, ctx, check_input, budget):
    from .oracle import verify_hamilton_path

    reduced = ctx.host.delete((ctx.v,) if isinstance(ctx, TwinLeafLift) else (ctx.v, ctx.w))
    if check_input:
        report = verify_hamilton_path(reduced, path, budget=budget)
        if not report.passed:
            raise ValueError(f"input is not a Hamilton path of the reduced graph: {report.summary()}")
    return reduced


def lift_twin_leaf(
    path: HamPath,
    ctx: TwinLeafLift,
    *,
    check_input: bool = True,
    budget: int = DEFAULT_SET_BUDGET,
) -> HamPath:
    """Lift a Hamilton path over a twin-leaf deletion.

    Every step F becomes F+v.  Maximal runs of steps containing x but not
    u are expanded pairwise with 6-step detours through F, F+u; an odd run
    leaves one step to expand in place, either at the path's end or
    against the following step, which necessarily equals F+u+v.
    """
    _checked_input(path, ctx, check_input, budget)
    n = ctx.host.n
    ub, vb = 1 << ctx.u, 1 << ctx.v
    fs = [s.bits for s in path]
    cls = [ctx.classify(b) for b in fs]

    out = []
    i = 0
    while i < len(fs):
        if cls[i] != _CLASS_PLAIN:
            out.append(fs[i] | vb)
            i += 1
            continue
        j = i
        while j + 1 < len(fs) and cls[j + 1] == _CLASS_PLAIN:
            j += 1
        last_paired = j - 1 if (j - i + 1) % 2 == 0 else j - 2
        t = i
        while t <= last_paired:
            ft, fn = fs[t], fs[t + 1]
            out += [ft | vb, ft, ft | ub, fn | ub, fn, fn | vb]
            t += 2
        if (j - i + 1) % 2 == 1:
            fj = fs[j]
            out += [fj | vb, fj, fj | ub]
            if j + 1 < len(fs) and fs[j + 1] != fj | ub:
                raise ConstructionError(
                    "step after a maximal run does not add the kept leaf; "
                    "the run was not maximal or the input path is broken"
                )
        i = j + 1
    return HamPath(VertexSet(b, n) for b in out)


def lift_pendant_pair(
    path: HamPath,
    ctx: PendantPairLift,
    *,
    check_input: bool = True,
    budget: int = DEFAULT_SET_BUDGET,
) -> HamPath:
    """Lift a Hamilton path over a pendant-pair deletion.

    Step F_i becomes the triple F_i+v, F_i+v+w, F_i+w, reversed on even
    positions so consecutive triples join.  For each detour set S, the
    step equal to S+u gets S+v, S+v+w spliced between its +v and +v+w
    nodes, oriented to match the triple's direction.
    """
    _checked_input(path, ctx, check_input, budget)
    n = ctx.host.n
    ub, vb, wb = 1 << ctx.u, 1 << ctx.v, 1 << ctx.w
    splice_at = {s.bits | ub: s.bits for s in ctx.detours}
    if len(splice_at) != len(ctx.detours):
        raise ConstructionError("two detour sets collapsed after adding u")

    out = []
    spliced = 0
    for idx, step in enumerate(path):
        f = step.bits
        s = splice_at.get(f)
        if s is not None:
            spliced += 1
        if idx % 2 == 0:
            out.append(f | vb)
            if s is not None:
                out += [s | vb, s | vb | wb]
            out += [f | vb | wb, f | wb]
        else:
            out += [f | wb, f | vb | wb]
            if s is not None:
                out += [s | vb | wb, s | vb]
            out.append(f | vb)
    if spliced != len(ctx.detours):
        raise ConstructionError(
            f"only {spliced} of {len(ctx.detours)} detour sets were reached; "
            "the input path does not cover the reduced graph"
        )
    return HamPath(VertexSet(b, n) for b in out)
