"""Alternating-path toolkit for oriented graphs.

A constructive search engine that finds antidirected (direction-alternating)
paths of a requested length whenever the graph's minimum pseudo-semidegree
is at least (3k-2)/4 (or its edge count exceeds (3k-4)|V|/2), together with
a brute-force oracle, extremal-instance generators, and a certificate-based
CLI for verifying and stress-testing the guarantees.
"""

__version__ = "0.1.0"

from .alternating import (
    AntiCycle,
    AntiPath,
    CycleTooShort,
    MissingEdge,
    NotAlternating,
    NotDistinct,
    OddCycleLength,
    Orientation,
    PathError,
    validate_anticycle,
    validate_antipath,
)
from .driver import (
    EmptyGraph,
    Found,
    NoMatchingWindow,
    NotGuaranteed,
    SearchOutcome,
    UnsupportedK,
    extract_window,
    find_antipath,
    find_antipath_dense,
)
from .generators import EvenK, gen_cycle_blowup, gen_random, gen_tournament_union
from .graphs import (
    DegreeProfile,
    Digraph,
    DuplicateEdge,
    GraphError,
    LoopEdge,
    OrientedGraph,
    TwoCycleInOriented,
    VertexOutOfRange,
    build_graph,
    degree_profile,
    reverse,
)
from .oracle import (
    BudgetExhausted,
    OracleResult,
    TooLarge,
    enumerate_oriented_graphs,
    has_antipath,
    longest_antipath,
)
from .peeling import peel
from .rotation import (
    CrossingInstance,
    HypothesisViolation,
    PreconditionError,
    close_anticycle,
    crossing_degree_sum,
    crossing_index,
    extend_anticycle,
    extend_endpoints,
    rotate_even_path,
    undirected_pair,
)

__all__ = [
    "AntiCycle",
    "AntiPath",
    "BudgetExhausted",
    "CrossingInstance",
    "CycleTooShort",
    "DegreeProfile",
    "Digraph",
    "DuplicateEdge",
    "EmptyGraph",
    "EvenK",
    "Found",
    "GraphError",
    "HypothesisViolation",
    "LoopEdge",
    "MissingEdge",
    "NoMatchingWindow",
    "NotAlternating",
    "NotDistinct",
    "NotGuaranteed",
    "OddCycleLength",
    "OracleResult",
    "OrientedGraph",
    "Orientation",
    "PathError",
    "PreconditionError",
    "SearchOutcome",
    "TooLarge",
    "TwoCycleInOriented",
    "UnsupportedK",
    "VertexOutOfRange",
    "build_graph",
    "close_anticycle",
    "crossing_degree_sum",
    "crossing_index",
    "degree_profile",
    "enumerate_oriented_graphs",
    "extend_anticycle",
    "extend_endpoints",
    "extract_window",
    "find_antipath",
    "find_antipath_dense",
    "gen_cycle_blowup",
    "gen_random",
    "gen_tournament_union",
    "has_antipath",
    "longest_antipath",
    "peel",
    "reverse",
    "rotate_even_path",
    "undirected_pair",
    "validate_anticycle",
    "validate_antipath",
]
