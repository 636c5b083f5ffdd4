"""kempe: edge-coloring machinery and verification harness for
chromatic-index analysis of simple graphs at desk scale."""

from .graph import (
    Graph,
    Graph6Error,
    Multigraph,
    SplitSpec,
    builtin_fixture,
    distance_to_set,
    from_graph6,
    full_deficiency_pairs,
    identify_pair,
    is_overfull,
    max_degree,
    split_vertex,
    to_graph6,
)
from .coloring import (
    ColoringError,
    ChainError,
    KempeChain,
    PartialEdgeColoring,
    ScriptError,
    SwapScript,
    apply_script,
    parse_coloring,
)
from .classify import (
    BudgetExceededError,
    GraphClass,
    classify,
    delta_coloring_of_minus_e,
    exact_chromatic_index,
    find_edge_coloring,
    is_critical_edge,
    is_delta_critical,
    vizing_plus_one_coloring,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "Graph6Error",
    "Multigraph",
    "SplitSpec",
    "builtin_fixture",
    "distance_to_set",
    "from_graph6",
    "full_deficiency_pairs",
    "identify_pair",
    "is_overfull",
    "max_degree",
    "split_vertex",
    "to_graph6",
    "ColoringError",
    "ChainError",
    "KempeChain",
    "PartialEdgeColoring",
    "ScriptError",
    "SwapScript",
    "apply_script",
    "parse_coloring",
    "BudgetExceededError",
    "GraphClass",
    "classify",
    "delta_coloring_of_minus_e",
    "exact_chromatic_index",
    "find_edge_coloring",
    "is_critical_edge",
    "is_delta_critical",
    "vizing_plus_one_coloring",
]
