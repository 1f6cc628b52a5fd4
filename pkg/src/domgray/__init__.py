"""Hamilton paths in dominating graphs.

The dominating graph of a graph H has one node per dominating set of H,
with edges between sets that differ by a single vertex.  This package
constructs Hamilton paths of dominating graphs for trees, for cycles whose
length is not divisible by 4, and for unicyclic graphs whose pendant trees
reduce onto the cycle; a brute-force oracle verifies paths and settles
small instances the constructions do not cover.
"""

from .composer import Outcome, Unknown, hamilton_path_auto, hamilton_path_unicyclic
from .cycles import NonExistence, brgc, filter_circular, hamilton_path_cycle
from .errors import BudgetExceededError, ConstructionError, NotReducibleError
from .graphs import (
    DomGraph,
    Graph,
    HamPath,
    VertexSet,
    build_dominating_graph,
    complete_graph,
    cycle_graph,
    enumerate_dominating_sets,
    is_dominating,
    path_graph,
    star_graph,
)
from .lifting import (
    PendantPairLift,
    TwinLeafLift,
    detour_sets,
    lift_pendant_pair,
    lift_twin_leaf,
)
from .oracle import (
    SearchResult,
    VerificationReport,
    brute_force_hamilton_path,
    parity_check,
    verify_hamilton_path,
)
from .reduction import (
    PendantPairReduction,
    Reduction,
    ReductionTrace,
    TwinLeafReduction,
    apply_pendant_pair,
    apply_reduction,
    apply_twin_leaf,
    find_reduction,
    reduce_tree_to_base,
    reduce_unicyclic,
)
from .trees import all_labeled_trees, base_path, hamilton_path_tree, prufer_to_tree, random_tree

__all__ = [
    "BudgetExceededError",
    "ConstructionError",
    "DomGraph",
    "Graph",
    "HamPath",
    "NonExistence",
    "NotReducibleError",
    "Outcome",
    "PendantPairLift",
    "PendantPairReduction",
    "Reduction",
    "ReductionTrace",
    "SearchResult",
    "TwinLeafLift",
    "TwinLeafReduction",
    "Unknown",
    "VerificationReport",
    "VertexSet",
    "all_labeled_trees",
    "apply_pendant_pair",
    "apply_reduction",
    "apply_twin_leaf",
    "base_path",
    "brgc",
    "brute_force_hamilton_path",
    "build_dominating_graph",
    "complete_graph",
    "cycle_graph",
    "detour_sets",
    "enumerate_dominating_sets",
    "filter_circular",
    "find_reduction",
    "hamilton_path_auto",
    "hamilton_path_cycle",
    "hamilton_path_tree",
    "hamilton_path_unicyclic",
    "is_dominating",
    "lift_pendant_pair",
    "lift_twin_leaf",
    "parity_check",
    "path_graph",
    "prufer_to_tree",
    "random_tree",
    "reduce_tree_to_base",
    "reduce_unicyclic",
    "star_graph",
    "verify_hamilton_path",
]
