"""Hypergraph containers and the matrices derived from them.

Vertices are non-negative integers. A hyperedge is a non-empty
``frozenset`` of vertices; the edge family has set semantics, so adding an
existing edge is a no-op. Edges keep their insertion order, which fixes the
column order of the incidence matrix. Rows follow ascending vertex id.
"""

from __future__ import annotations

import copy
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, Hashable, Iterable, List, Optional, Tuple

import numpy as np

from .errors import EmptyEdge, InvalidParameter, UnknownVertex

Edge = frozenset


def as_edge(members: Iterable[int]) -> frozenset:
    edge = frozenset(int(v) for v in members)
    if not edge:
        raise EmptyEdge("a hyperedge needs at least one member")
    return edge


def edge_key(edge: frozenset) -> Tuple[int, ...]:
    """Sorted member tuple; the lexicographic tie-break for edge order."""
    return tuple(sorted(edge))


@dataclass
class IncidenceMatrix:
    """N x M 0/1 matrix with ``entries[i, m] == 1`` iff ``row_index[i]`` is in ``col_index[m]``."""

    entries: np.ndarray
    row_index: List[int]
    col_index: List[frozenset]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.entries.shape


class Hypergraph:
    """Undirected hypergraph with optional weights and attributes.

    Weights and attributes are carried along (copies, serialization) but no
    computation in this package reads them.
    """

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Iterable[int]] = ()):
        self._vertices: set = set()
        self._edges: Dict[frozenset, None] = {}
        self.vertex_weights: Optional[Dict[int, float]] = None
        self.edge_weights: Optional[Dict[frozenset, float]] = None
        self.vertex_attrs: Dict[int, Dict[str, Any]] = {}
        self.edge_attrs: Dict[frozenset, Dict[str, Any]] = {}
        # unrecognised document fields, kept so that load/save round-trips
        self.extra: Dict[str, Any] = {}
        for v in vertices:
            self.add_vertex(v)
        for e in edges:
            self.add_edge(e)

    # -- construction -----------------------------------------------------

    def add_vertex(self, v: int) -> "Hypergraph":
        v = int(v)
        if v < 0:
            raise InvalidParameter(f"vertex ids must be non-negative, got {v}")
        if v not in self._vertices:
            self._vertices.add(v)
            if self.vertex_weights is not None:
                self.vertex_weights[v] = 1.0
        return self

    def add_edge(self, members: Iterable[int]) -> "Hypergraph":
        edge = as_edge(members)
        for v in edge:
            self.add_vertex(v)
        if edge not in self._edges:
            self._edges[edge] = None
            if self.edge_weights is not None:
                self.edge_weights[edge] = 1.0
        return self

    def remove_edge(self, members: Iterable[int]) -> "Hypergraph":
        edge = frozenset(int(v) for v in members)
        if edge in self._edges:
            del self._edges[edge]
            if self.edge_weights is not None:
                self.edge_weights.pop(edge, None)
            self.edge_attrs.pop(edge, None)
        return self

    def remove_vertex(self, v: int) -> "Hypergraph":
        """Drop ``v`` together with every edge that contains it."""
        if v not in self._vertices:
            raise UnknownVertex(f"vertex {v} is not in the hypergraph")
        for edge in [e for e in self._edges if v in e]:
            self.remove_edge(edge)
        self._vertices.discard(v)
        if self.vertex_weights is not None:
            self.vertex_weights.pop(v, None)
        self.vertex_attrs.pop(v, None)
        return self

    def set_vertex_weight(self, v: int, weight: float) -> None:
        self._require(v)
        if self.vertex_weights is None:
            self.vertex_weights = {u: 1.0 for u in self._vertices}
        self.vertex_weights[v] = float(weight)

    def set_edge_weight(self, members: Iterable[int], weight: float) -> None:
        edge = frozenset(members)
        if edge not in self._edges:
            raise KeyError(f"edge {edge_key(edge)} is not in the hypergraph")
        if self.edge_weights is None:
            self.edge_weights = {e: 1.0 for e in self._edges}
        self.edge_weights[edge] = float(weight)

    # -- queries ----------------------------------------------------------

    @property
    def vertices(self) -> List[int]:
        """Vertices in ascending order."""
        return sorted(self._vertices)

    @property
    def edges(self) -> List[frozenset]:
        """Edges in canonical (insertion) order."""
        return list(self._edges)

    @property
    def num_vertices(self) -> int:
        return len(self._vertices)

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: int) -> bool:
        return v in self._vertices

    def has_edge(self, members: Iterable[int]) -> bool:
        return frozenset(members) in self._edges

    def __contains__(self, v) -> bool:
        return v in self._vertices

    def _require(self, v: int) -> None:
        if v not in self._vertices:
            raise UnknownVertex(f"vertex {v} is not in the hypergraph")

    def incident_edges(self, v: int) -> List[frozenset]:
        self._require(v)
        return [e for e in self._edges if v in e]

    def degree(self, v: int) -> int:
        self._require(v)
        return sum(1 for e in self._edges if v in e)

    def degrees(self) -> Dict[int, int]:
        deg = dict.fromkeys(self.vertices, 0)
        for e in self._edges:
            for v in e:
                deg[v] += 1
        return deg

    def edge_sizes(self) -> List[int]:
        return [len(e) for e in self._edges]

    # -- matrices ---------------------------------------------------------

    def incidence_matrix(self) -> IncidenceMatrix:
        rows = self.vertices
        cols = self.edges
        pos = {v: i for i, v in enumerate(rows)}
        entries = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for m, e in enumerate(cols):
            for v in e:
                entries[pos[v], m] = 1
        return IncidenceMatrix(entries, rows, cols)

    def adjacency_matrix(self) -> np.ndarray:
        """``e @ e.T``: entry (i, j) counts the edges holding both i and j."""
        e = self.incidence_matrix().entries
        return e @ e.T

    def edge_matrix(self) -> np.ndarray:
        """``e.T @ e``: entry (m, n) is the overlap size of edges m and n."""
        e = self.incidence_matrix().entries
        return e.T @ e

    @classmethod
    def from_incidence(cls, inc: IncidenceMatrix) -> "Hypergraph":
        entries = np.asarray(inc.entries)
        h = cls(vertices=inc.row_index)
        for m in range(entries.shape[1]):
            members = [inc.row_index[i] for i in np.flatnonzero(entries[:, m])]
            h.add_edge(members)
        return h

    # -- misc -------------------------------------------------------------

    def copy(self) -> "Hypergraph":
        return copy.deepcopy(self)

    def same_structure(self, other: "Hypergraph") -> bool:
        """Same vertex set and same edges in the same canonical order."""
        return self.vertices == other.vertices and self.edges == other.edges

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph) or type(self) is not type(other):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and set(self._edges) == set(other._edges)
            and self.vertex_weights == other.vertex_weights
            and self.edge_weights == other.edge_weights
            and self.vertex_attrs == other.vertex_attrs
            and self.edge_attrs == other.edge_attrs
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"{type(self).__name__}(|V|={self.num_vertices}, |E|={self.num_edges})"


class DirectedHypergraph(Hypergraph):
    """Hypergraph that also records directed (tail, head) pairs.

    Every directed edge contributes its undirected shadow ``tail | head`` to
    the ordinary edge family, so all undirected operations still apply.
    """

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Iterable[int]] = ()):
        super().__init__(vertices, edges)
        self._directed: Dict[Tuple[frozenset, frozenset], None] = {}

    def add_directed_edge(self, tail: Iterable[int], head: Iterable[int]) -> "DirectedHypergraph":
        t = as_edge(tail)
        hd = as_edge(head)
        self.add_edge(t | hd)
        self._directed.setdefault((t, hd), None)
        return self

    def remove_directed_edge(self, tail: Iterable[int], head: Iterable[int]) -> "DirectedHypergraph":
        self._directed.pop((frozenset(tail), frozenset(head)), None)
        return self

    @property
    def directed_edges(self) -> List[Tuple[frozenset, frozenset]]:
        return list(self._directed)

    def remove_edge(self, members: Iterable[int]) -> "DirectedHypergraph":
        edge = frozenset(int(v) for v in members)
        super().remove_edge(edge)
        # a directed edge cannot outlive its undirected shadow
        for pair in [p for p in getattr(self, "_directed", {}) if p[0] | p[1] == edge]:
            del self._directed[pair]
        return self

    def __eq__(self, other) -> bool:
        base = super().__eq__(other)
        if base is NotImplemented or not base:
            return base
        return set(self._directed) == set(other._directed)

    __hash__ = None


@dataclass
class MultilayerHypergraph:
    """Ordered layers plus interlinks ``((layer, vertex), (layer, vertex))``."""

    layers: List[Hypergraph] = field(default_factory=list)
    interlinks: List[Tuple[Tuple[int, int], Tuple[int, int]]] = field(default_factory=list)
    extra: Dict[str, Any] = field(default_factory=dict)

    def add_layer(self, h: Hypergraph) -> int:
        self.layers.append(h)
        return len(self.layers) - 1

    def add_interlink(self, a: Tuple[int, int], b: Tuple[int, int]) -> None:
        a = (int(a[0]), int(a[1]))
        b = (int(b[0]), int(b[1]))
        for layer, v in (a, b):
            if not 0 <= layer < len(self.layers):
                raise InvalidParameter(f"no layer {layer}")
            if v not in self.layers[layer]:
                raise UnknownVertex(f"vertex {v} is not in layer {layer}")
        if a[0] == b[0]:
            raise InvalidParameter("an interlink must join two different layers")
        self.interlinks.append((a, b))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultilayerHypergraph):
            return NotImplemented
        return self.layers == other.layers and self.interlinks == other.interlinks


class Graph:
    """Plain undirected simple graph; the target of hypergraph expansions."""

    def __init__(self, nodes: Iterable[Hashable] = ()):
        self.nodes: set = set(nodes)
        self.edges: set = set()

    def add_node(self, u) -> None:
        self.nodes.add(u)

    def add_edge(self, u, v) -> None:
        if u == v:
            return
        self.nodes.update((u, v))
        self.edges.add((u, v) if u < v else (v, u))

    def neighbors(self, u) -> List:
        return sorted({b if a == u else a for a, b in self.edges if u in (a, b)})

    def adjacency(self) -> Dict[Any, List]:
        adj = {u: [] for u in self.nodes}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def connected_components(self) -> List[List]:
        """Components as sorted node lists, ordered by smallest member."""
        adj = self.adjacency()
        seen: set = set()
        out = []
        for start in sorted(self.nodes):
            if start in seen:
                continue
            seen.add(start)
            queue = deque([start])
            comp = []
            while queue:
                u = queue.popleft()
                comp.append(u)
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            out.append(sorted(comp))
        return out

    @classmethod
    def complete(cls, nodes: Iterable) -> "Graph":
        g = cls(nodes)
        for u, v in combinations(sorted(g.nodes), 2):
            g.add_edge(u, v)
        return g

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    __hash__ = None

    def __repr__(self) -> str:
        return f"Graph(nodes={len(self.nodes)}, edges={len(self.edges)})"


def incidence_matrix(h: Hypergraph) -> IncidenceMatrix:
    return h.incidence_matrix()


def adjacency_matrix(h: Hypergraph) -> np.ndarray:
    return h.adjacency_matrix()


def edge_matrix(h: Hypergraph) -> np.ndarray:
    return h.edge_matrix()


def vertex_degree(h: Hypergraph, v: int) -> int:
    return h.degree(v)
