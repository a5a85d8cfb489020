"""Random walks driven by the hyperedge-size-weighted transition matrix.

With incidence matrix ``e``, hyperedge sizes on the diagonal of ``C = e.T e``
and ``A = e e.T``, the walker at ``i`` moves to ``j != i`` with probability

    ((e diag(C) e.T)_ij - A_ij) / (sum_{l != i} (e diag(C) e.T)_il - k_i)

where ``k_i = sum_{l != i} A_il``. Expanding the products, the numerator is
``sum_m e_im e_jm (|e_m| - 1)`` and the denominator ``sum_m e_im (|e_m| - 1)**2``,
so rows are stochastic without renormalisation.

The lazy walk keeps ``(e diag(C) e.T)_ij`` as numerator, diagonal included,
and divides by the row sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

import numpy as np

from ..core import Hypergraph
from ..errors import DisconnectedDenominator, InvalidParameter, IsolatedVertex, UnknownVertex
from ..rng import SeedLike, make_rng


@dataclass
class TransitionMatrix:
    """Row-stochastic matrix; row/column ``i`` is vertex ``vertices[i]``."""

    matrix: np.ndarray
    vertices: List[int]

    def index_of(self, v: int) -> int:
        try:
            return self.vertices.index(v)
        except ValueError:
            raise UnknownVertex(f"vertex {v} is not in the hypergraph") from None


def transition_matrix(h: Hypergraph, lazy: bool = False) -> TransitionMatrix:
    inc = h.incidence_matrix()
    e = inc.entries
    deg = e.sum(axis=1)
    isolated = [inc.row_index[i] for i in np.flatnonzero(deg == 0)]
    if isolated:
        raise IsolatedVertex(f"vertices without incident edges: {isolated}")

    sizes = e.sum(axis=0)
    weighted = (e * sizes) @ e.T  # e diag(C) e.T, exact in integers
    adjacency = e @ e.T

    if lazy:
        numer = weighted
        denom = weighted.sum(axis=1)
    else:
        numer = weighted - adjacency
        np.fill_diagonal(numer, 0)
        off_diag = weighted.sum(axis=1) - np.diag(weighted)
        hyperdegree = adjacency.sum(axis=1) - np.diag(adjacency)
        denom = off_diag - hyperdegree
        stuck = [inc.row_index[i] for i in np.flatnonzero(denom == 0)]
        if stuck:
            raise DisconnectedDenominator(
                f"vertices that only belong to single-vertex edges: {stuck}"
            )
    matrix = numer / denom[:, None].astype(float)
    return TransitionMatrix(matrix, list(inc.row_index))


def stationary_distribution(t: TransitionMatrix) -> np.ndarray:
    """Left eigenvector of ``t`` for eigenvalue 1, normalised to sum 1.

    Only unique on irreducible chains (connected hypergraphs).
    """
    vals, vecs = np.linalg.eig(t.matrix.T)
    k = int(np.argmin(np.abs(vals - 1.0)))
    pi = np.real(vecs[:, k])
    return pi / pi.sum()


def random_walk(
    h: Hypergraph, start: int, steps: int, lazy: bool = False, seed: SeedLike = 0
) -> List[int]:
    """Vertex sequence of length ``steps + 1`` beginning at ``start``."""
    if int(steps) != steps or steps < 0:
        raise InvalidParameter(f"steps must be a non-negative integer, got {steps}")
    if start not in h:
        raise UnknownVertex(f"vertex {start} is not in the hypergraph")
    t = transition_matrix(h, lazy=lazy)
    rng = make_rng(seed)
    cdf = np.cumsum(t.matrix, axis=1)
    cdf /= cdf[:, -1:]
    draws = rng.random(int(steps))
    i = t.index_of(start)
    path = [start]
    for u in draws:
        i = int(np.searchsorted(cdf[i], u, side="right"))
        path.append(t.vertices[i])
    return path
