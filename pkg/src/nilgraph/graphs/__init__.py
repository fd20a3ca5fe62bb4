from .core import (
    ELEMENT,
    TRIPLE,
    DiMultigraph,
    Graph,
    VertexBijection,
    all_graphs,
    complete_graph,
    cycle_graph,
    empty_graph,
    maps_graph,
    maps_multigraph,
    path_graph,
)
from .encode import encode_simple, encoded_size
from .iso import graph_iso, multigraph_iso, refine
from .textio import ParseError, read_graph, read_multigraph, write_graph, write_multigraph

__all__ = [
    "ELEMENT",
    "TRIPLE",
    "DiMultigraph",
    "Graph",
    "ParseError",
    "VertexBijection",
    "all_graphs",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "encode_simple",
    "encoded_size",
    "graph_iso",
    "maps_graph",
    "maps_multigraph",
    "multigraph_iso",
    "path_graph",
    "read_graph",
    "read_multigraph",
    "refine",
    "write_graph",
    "write_multigraph",
]
