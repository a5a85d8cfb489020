"""Hypergraph construction, random models, metrics, algorithms and dynamics."""

__version__ = "0.1.0"

from .algorithms import connected_components, graph_expansion, simple_reduction
from .core import (
    DirectedHypergraph,
    Graph,
    Hypergraph,
    IncidenceMatrix,
    MultilayerHypergraph,
    adjacency_matrix,
    edge_matrix,
    incidence_matrix,
    vertex_degree,
)
from .generators import k_uniform, simple_bipartite, simple_matrix, simple_order, simple_powersets
from .metrics import average_edge_size, average_vertex_degree, density, girth

__all__ = [
    "DirectedHypergraph",
    "Graph",
    "Hypergraph",
    "IncidenceMatrix",
    "MultilayerHypergraph",
    "adjacency_matrix",
    "average_edge_size",
    "average_vertex_degree",
    "connected_components",
    "density",
    "edge_matrix",
    "girth",
    "graph_expansion",
    "incidence_matrix",
    "k_uniform",
    "simple_bipartite",
    "simple_matrix",
    "simple_order",
    "simple_powersets",
    "simple_reduction",
    "vertex_degree",
]
