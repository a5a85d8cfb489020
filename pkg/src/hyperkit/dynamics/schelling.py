"""Schelling segregation on a hypergraph.

Each labeled vertex looks at its incident edges of size > 1. In each such
edge it counts the other members sharing its label, divided by ``|e| - 1``;
the neighbourhood coefficient is the mean of those fractions. A vertex with
no such edge has no constraint (``None``) and never moves.

One iteration picks a labeled vertex uniformly. If its coefficient is below
``tau``, its label moves to a uniformly chosen unlabeled vertex that lies in
at least one edge of size > 1, and the picked vertex becomes unlabeled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..core import Hypergraph
from ..errors import (
    InvalidParameter,
    NoUnlabeledVertex,
    UnknownVertex,
    UnlabeledVertex,
)
from ..rng import SeedLike, make_rng
from .trajectory import SCHELLING_COLUMNS, Trajectory


@dataclass
class SchellingState:
    """Labels (``None`` = unlabeled), tolerance and the run's generator."""

    labels: Dict[int, Optional[int]]
    tau: float
    rng: np.random.Generator = field(default_factory=lambda: make_rng(0), repr=False)

    def __post_init__(self):
        if not 0.0 <= self.tau <= 1.0:
            raise InvalidParameter(f"tau must lie in [0, 1], got {self.tau}")
        if all(label is not None for label in self.labels.values()):
            raise InvalidParameter("at least one vertex must stay unlabeled")

    @classmethod
    def random(
        cls, h: Hypergraph, n_labels: int, per_label: int, tau: float, seed: SeedLike
    ) -> "SchellingState":
        """``per_label`` vertices for each of ``n_labels`` labels, placed by a shuffle."""
        vertices = h.vertices
        if n_labels < 1 or per_label < 1:
            raise InvalidParameter("need at least one label with at least one vertex")
        if n_labels * per_label >= len(vertices):
            raise InvalidParameter(
                f"{n_labels}x{per_label} labeled vertices leave none unlabeled "
                f"among {len(vertices)}"
            )
        rng = make_rng(seed)
        pool: List[Optional[int]] = [a for a in range(n_labels) for _ in range(per_label)]
        pool += [None] * (len(vertices) - len(pool))
        order = rng.permutation(len(pool))
        labels = {v: pool[int(j)] for v, j in zip(vertices, order)}
        return cls(labels, float(tau), rng)

    def labeled(self) -> List[int]:
        return sorted(v for v, a in self.labels.items() if a is not None)

    def unlabeled(self) -> List[int]:
        return sorted(v for v, a in self.labels.items() if a is None)

    def class_sizes(self) -> Dict[int, int]:
        sizes: Dict[int, int] = {}
        for a in self.labels.values():
            if a is not None:
                sizes[a] = sizes.get(a, 0) + 1
        return sizes


def _group_edges(h: Hypergraph, v: int) -> List[frozenset]:
    return [e for e in h.incident_edges(v) if len(e) > 1]


def neighborhood_coefficient(h: Hypergraph, s: SchellingState, v: int) -> Optional[float]:
    if v not in s.labels:
        raise UnknownVertex(f"vertex {v} has no label entry")
    label = s.labels[v]
    if label is None:
        raise UnlabeledVertex(f"vertex {v} is unlabeled")
    edges = _group_edges(h, v)
    if not edges:
        return None
    total = 0.0
    for e in edges:
        same = sum(1 for u in e if u != v and s.labels.get(u) == label)
        total += same / (len(e) - 1)
    return total / len(edges)


def mean_coefficient(h: Hypergraph, s: SchellingState) -> float:
    """Mean coefficient over constrained labeled vertices; NaN if there are none."""
    values = [neighborhood_coefficient(h, s, v) for v in s.labeled()]
    values = [g for g in values if g is not None]
    return float(np.mean(values)) if values else float("nan")


def is_settled(h: Hypergraph, s: SchellingState) -> bool:
    for v in s.labeled():
        g = neighborhood_coefficient(h, s, v)
        if g is not None and g < s.tau:
            return False
    return True


def schelling_step(h: Hypergraph, s: SchellingState) -> Tuple[SchellingState, bool]:
    """One iteration, mutating ``s`` in place."""
    labeled = s.labeled()
    if not labeled:
        return s, False
    v = labeled[int(s.rng.integers(len(labeled)))]
    g = neighborhood_coefficient(h, s, v)
    if g is None or g >= s.tau:
        return s, False
    unlabeled = s.unlabeled()
    if not unlabeled:
        raise NoUnlabeledVertex("a move is required but every vertex is labeled")
    targets = [u for u in unlabeled if _group_edges(h, u)]
    if not targets:
        return s, False
    u = targets[int(s.rng.integers(len(targets)))]
    s.labels[u], s.labels[v] = s.labels[v], None
    return s, True


def schelling_run(
    h: Hypergraph, s: SchellingState, max_iters: int
) -> Tuple[SchellingState, Trajectory]:
    """Iterate until every labeled vertex is settled or ``max_iters`` is reached.

    Row 0 of the trajectory is the initial state; row ``t`` holds the mean
    coefficient after iteration ``t`` and whether that iteration moved a label.
    """
    if int(max_iters) != max_iters or max_iters < 0:
        raise InvalidParameter(f"max_iters must be a non-negative integer, got {max_iters}")
    traj = Trajectory(SCHELLING_COLUMNS)
    traj.append(0, mean_coefficient(h, s), 0)
    for step in range(1, int(max_iters) + 1):
        if is_settled(h, s):
            break
        s, moved = schelling_step(h, s)
        traj.append(step, mean_coefficient(h, s), int(moved))
    traj.final_state = dict(s.labels)
    return s, traj
