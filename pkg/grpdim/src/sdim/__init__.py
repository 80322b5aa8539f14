from .model import SdimMethod, SdimResult
from .clique import clique_number, maximum_clique, iter_maximal_cliques
from .resolving import (
    strongly_resolves,
    is_strong_resolving_set,
    sdim_subset_oracle,
    strong_resolving_graph,
)
from .engine import sdim, sdim_vertex_cover, sdim_diameter2, is_proper_order_chain

__all__ = [
    "SdimMethod",
    "SdimResult",
    "clique_number",
    "maximum_clique",
    "iter_maximal_cliques",
    "strongly_resolves",
    "is_strong_resolving_set",
    "sdim_subset_oracle",
    "strong_resolving_graph",
    "sdim",
    "sdim_vertex_cover",
    "sdim_diameter2",
    "is_proper_order_chain",
]
