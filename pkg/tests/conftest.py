import numpy as np
import pytest
from hypothesis import strategies as st

from hyperkit import Hypergraph


@st.composite
def hypergraphs(draw, max_vertices=12, max_edges=10, max_edge_size=None):
    n = draw(st.integers(0, max_vertices))
    h = Hypergraph(vertices=range(n))
    if n == 0:
        return h
    size_cap = n if max_edge_size is None else min(n, max_edge_size)
    edges = draw(
        st.lists(
            st.sets(st.integers(0, n - 1), min_size=1, max_size=size_cap),
            max_size=max_edges,
        )
    )
    for e in edges:
        h.add_edge(e)
    return h


def random_hypergraph(rng, max_vertices=12, max_edges=10, max_size=None):
    """Unstructured random instance for corpus-style loops."""
    n = int(rng.integers(1, max_vertices + 1))
    h = Hypergraph(vertices=range(n))
    cap = n if max_size is None else min(n, max_size)
    for _ in range(int(rng.integers(0, max_edges + 1))):
        size = int(rng.integers(1, cap + 1))
        h.add_edge(rng.choice(n, size=size, replace=False).tolist())
    return h


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def union_find_components(h):
    uf = UnionFind(h.vertices)
    for e in h.edges:
        members = sorted(e)
        for v in members[1:]:
            uf.union(members[0], v)
    groups = {}
    for v in h.vertices:
        groups.setdefault(uf.find(v), []).append(v)
    return sorted(groups.values())


def brute_transition(h, lazy=False):
    """Transition probabilities by walking over hyperedges, no matrix algebra.

    Every edge e adds weight |e| - 1 to each ordered pair of distinct members
    (standard walk), or |e| to every ordered pair including i == i (lazy walk);
    rows are then divided by their totals.
    """
    vs = h.vertices
    pos = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    weights = [[0] * n for _ in range(n)]
    for e in h.edges:
        members = [pos[v] for v in e]
        w = len(e) if lazy else len(e) - 1
        for a in members:
            for b in members:
                if a != b or lazy:
                    weights[a][b] += w
    out = np.zeros((n, n))
    for a in range(n):
        total = sum(weights[a])
        out[a] = [x / total for x in weights[a]]
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
