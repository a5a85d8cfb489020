"""Random hypergraph models.

All generators build vertices ``0 .. n-1``. Candidate edges that come out
empty are dropped and duplicates collapse, because the edge family is a set.

The enumerating models (``simple_powersets``, ``simple_order``,
``k_uniform``) walk candidates by size, then lexicographically, and draw one
uniform per candidate. ``simple_order(n, n, p, seed)`` therefore returns the
same hypergraph as ``simple_powersets(n, p, seed)``.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterator, Tuple

import numpy as np

from .core import Hypergraph
from .errors import InvalidBound, InvalidParameter, InvalidProbability, TooLarge
from .rng import SeedLike, make_rng

MAX_POWERSET_N = 20


def _check_p(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise InvalidProbability(f"p must lie in [0, 1], got {p}")
    return p


def _check_count(name: str, value: int) -> int:
    if int(value) != value or value < 0:
        raise InvalidParameter(f"{name} must be a non-negative integer, got {value}")
    return int(value)


def _check_bound(k: int, n: int) -> int:
    if int(k) != k or not 1 <= k <= n:
        raise InvalidBound(f"k must satisfy 1 <= k <= n (n={n}), got {k}")
    return int(k)


def _from_columns(n: int, mask: np.ndarray) -> Hypergraph:
    """One candidate edge per column of an n x m boolean mask."""
    h = Hypergraph(vertices=range(n))
    for col in mask.T:
        members = np.flatnonzero(col)
        if members.size:
            h.add_edge(members.tolist())
    return h


def sample_incidence(n: int, m: int, p: float, seed: SeedLike) -> np.ndarray:
    """Raw n x m Bernoulli(p) incidence draw behind :func:`simple_matrix`.

    Its entry count is exactly Binomial(n*m, p); the hypergraph built from it
    has fewer incidences whenever columns coincide.
    """
    n = _check_count("n", n)
    m = _check_count("m", m)
    p = _check_p(p)
    return make_rng(seed).random((n, m)) < p


def simple_matrix(n: int, m: int, p: float, seed: SeedLike) -> Hypergraph:
    """Each entry of an n x m incidence matrix is 1 with probability ``p``."""
    return _from_columns(int(n), sample_incidence(n, m, p, seed))


def simple_bipartite(n: int, m: int, p: float, seed: SeedLike) -> Hypergraph:
    """Random bipartite graph between n vertices and m edge-nodes.

    Every (vertex, edge-node) pair is linked with probability ``p`` and each
    edge-node's neighbourhood becomes a hyperedge. This is the same law as
    :func:`simple_matrix`; draws are made edge-node by edge-node, so a given
    seed yields a different sample.
    """
    return _from_columns(int(n), sample_links(n, m, p, seed).T)


def sample_links(n: int, m: int, p: float, seed: SeedLike) -> np.ndarray:
    """Raw m x n (edge-node, vertex) link draw behind :func:`simple_bipartite`."""
    n = _check_count("n", n)
    m = _check_count("m", m)
    p = _check_p(p)
    return make_rng(seed).random((m, n)) < p


def _candidates(n: int, sizes) -> Iterator[Tuple[int, ...]]:
    for size in sizes:
        yield from combinations(range(n), size)


def _sample_candidates(n: int, sizes, p: float, rng: np.random.Generator) -> Hypergraph:
    total = sum(comb(n, s) for s in sizes)
    keep = rng.random(total) < p
    h = Hypergraph(vertices=range(n))
    for chosen, members in zip(keep, _candidates(n, sizes)):
        if chosen:
            h.add_edge(members)
    return h


def simple_powersets(n: int, p: float, seed: SeedLike) -> Hypergraph:
    """Each non-empty subset of ``range(n)`` is an edge with probability ``p``."""
    n = _check_count("n", n)
    if n > MAX_POWERSET_N:
        raise TooLarge(f"power-set enumeration is capped at n={MAX_POWERSET_N}, got {n}")
    p = _check_p(p)
    return _sample_candidates(n, range(1, n + 1), p, make_rng(seed))


def simple_order(n: int, k: int, p: float, seed: SeedLike) -> Hypergraph:
    """Each subset of size 1..k is an edge with probability ``p``."""
    n = _check_count("n", n)
    k = _check_bound(k, n)
    p = _check_p(p)
    if k == n and n > MAX_POWERSET_N:
        raise TooLarge(f"power-set enumeration is capped at n={MAX_POWERSET_N}, got {n}")
    return _sample_candidates(n, range(1, k + 1), p, make_rng(seed))


def k_uniform(n: int, k: int, p: float, seed: SeedLike) -> Hypergraph:
    """Each k-subset is an edge with probability ``p``."""
    n = _check_count("n", n)
    k = _check_bound(k, n)
    p = _check_p(p)
    return _sample_candidates(n, (k,), p, make_rng(seed))


GENERATORS = {
    "simple-matrix": simple_matrix,
    "simple-bipartite": simple_bipartite,
    "simple-powersets": simple_powersets,
    "simple-order": simple_order,
    "k-uniform": k_uniform,
}
