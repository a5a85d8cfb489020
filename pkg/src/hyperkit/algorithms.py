"""Connectivity, simple reduction and graph expansions."""

from __future__ import annotations

from itertools import combinations
from typing import List

from .core import Graph, Hypergraph
from .errors import UnknownMode


def bipartite_lift(h: Hypergraph) -> Graph:
    """Graph on ``|V| + |E|`` nodes: vertex index ``i`` joined to ``|V| + m`` when it lies in edge ``m``.

    Nodes are positions in the canonical orders, not vertex ids.
    """
    vertices = h.vertices
    pos = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)
    g = Graph(range(n + h.num_edges))
    for m, edge in enumerate(h.edges):
        for v in edge:
            g.add_edge(pos[v], n + m)
    return g


def connected_components(h: Hypergraph) -> List[List[int]]:
    """Vertex sets of the connected components, sorted, ordered by smallest member.

    Components are taken on the bipartite lift and projected back onto the
    vertex nodes; an isolated vertex is its own component.
    """
    vertices = h.vertices
    n = len(vertices)
    out = []
    for cluster in bipartite_lift(h).connected_components():
        component = [vertices[i] for i in cluster if i < n]
        if component:
            out.append(component)
    return out


def simple_reduction(h: Hypergraph) -> Hypergraph:
    """Copy of ``h`` without any edge that is contained in another edge."""
    reduced = h.copy()
    edge_list = h.edges
    for i, outer in enumerate(edge_list):
        for j, inner in enumerate(edge_list):
            if i != j and inner <= outer and reduced.has_edge(inner):
                reduced.remove_edge(inner)
    return reduced


def star_offset(h: Hypergraph) -> int:
    """Id of the first star node: one past the largest vertex id."""
    return max(h.vertices) + 1 if h.num_vertices else 0


def graph_expansion(h: Hypergraph, mode: str) -> Graph:
    """Clique or star expansion of ``h``.

    ``clique``: nodes are the vertices; every pair inside an edge is linked.
    ``star``: edge ``m`` gets a new node ``star_offset(h) + m`` linked to each
    of its members. For dense ids ``0..N-1`` the star nodes are ``N..N+M-1``.
    """
    if mode == "clique":
        g = Graph(h.vertices)
        for edge in h.edges:
            for u, v in combinations(sorted(edge), 2):
                g.add_edge(u, v)
        return g
    if mode == "star":
        offset = star_offset(h)
        g = Graph(h.vertices)
        for m, edge in enumerate(h.edges):
            g.add_node(offset + m)
            for v in edge:
                g.add_edge(v, offset + m)
        return g
    raise UnknownMode(f"expansion mode must be 'clique' or 'star', got {mode!r}")
