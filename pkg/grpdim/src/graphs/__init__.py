from .model import SimpleGraph, ReducedGraph, UNREACHABLE
from .builders import Family, FAMILIES, build_graph, closed_neighborhood, reduced_graph
from .export import to_dot, to_json, graph_from_json, write_graph

__all__ = [
    "SimpleGraph",
    "ReducedGraph",
    "UNREACHABLE",
    "Family",
    "FAMILIES",
    "build_graph",
    "closed_neighborhood",
    "reduced_graph",
    "to_dot",
    "to_json",
    "graph_from_json",
    "write_graph",
]
