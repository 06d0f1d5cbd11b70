"""Edge-ideal invariants of rooted products and multi-clique corona graphs."""

from .canon import CanonicalCode, canonical_code, is_isomorphic
from .graphs import (
    CoronaSpec,
    Graph,
    RootedFamily,
    add_pendant,
    complete_graph,
    corona,
    cycle_graph,
    delete_closed_neighborhood,
    delete_vertex,
    empty_graph,
    induced_subgraph,
    multi_clique_corona,
    multi_whisker_transform,
    new_graph,
    path_graph,
    rooted_product,
    whisker_graph,
)

__all__ = [
    "CanonicalCode",
    "CoronaSpec",
    "Graph",
    "RootedFamily",
    "add_pendant",
    "canonical_code",
    "complete_graph",
    "corona",
    "cycle_graph",
    "delete_closed_neighborhood",
    "delete_vertex",
    "empty_graph",
    "induced_subgraph",
    "is_isomorphic",
    "multi_clique_corona",
    "multi_whisker_transform",
    "new_graph",
    "path_graph",
    "rooted_product",
    "whisker_graph",
]
