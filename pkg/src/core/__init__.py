"""Graph representation, named-family generators and structural search."""

from src.core.generators import generate
from src.core.graph import (
    DistancePartition,
    Graph,
    InducedSubgraph,
    distance_partition,
    line_graph,
    neighborhood_subgraph,
)
from src.core.io import format_graph, parse_graph
from src.core.search import (
    enumerate_maximal_cliques,
    find_induced_complete_bipartite,
    find_induced_quadrangle,
)

__all__ = [
    "DistancePartition",
    "Graph",
    "InducedSubgraph",
    "distance_partition",
    "enumerate_maximal_cliques",
    "find_induced_complete_bipartite",
    "find_induced_quadrangle",
    "format_graph",
    "generate",
    "line_graph",
    "neighborhood_subgraph",
    "parse_graph",
]
