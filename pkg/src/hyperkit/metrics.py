"""Scalar structural metrics."""

from __future__ import annotations

from .core import Hypergraph
from .errors import EmptyHypergraph, NoEdges


def density(h: Hypergraph) -> float:
    """Edges over the number of possible non-empty edges, ``|E| / (2**|V| - 1)``.

    Python int division is correctly rounded, so the result is the nearest
    float to the exact ratio for any vertex count.
    """
    n = h.num_vertices
    if n == 0:
        raise EmptyHypergraph("density is undefined without vertices")
    return h.num_edges / (2**n - 1)


def girth(h: Hypergraph) -> int:
    """Size of the smallest edge."""
    if h.num_edges == 0:
        raise NoEdges("girth is undefined without edges")
    return min(h.edge_sizes())


def total_incidence(h: Hypergraph) -> int:
    return sum(h.edge_sizes())


def average_vertex_degree(h: Hypergraph) -> float:
    if h.num_vertices == 0:
        raise EmptyHypergraph("average degree is undefined without vertices")
    return total_incidence(h) / h.num_vertices


def average_edge_size(h: Hypergraph) -> float:
    if h.num_edges == 0:
        raise NoEdges("average edge size is undefined without edges")
    return total_incidence(h) / h.num_edges


METRICS = {
    "density": density,
    "girth": girth,
    "average_vertex_degree": average_vertex_degree,
    "average_edge_size": average_edge_size,
}
