"""Discrete-time SIR on a hypergraph with synchronous updates.

A susceptible vertex ``i`` is exposed to ``k_i`` infected co-members, summed
over all its incident edges (a neighbour shared by two edges counts twice),
and becomes infected with probability ``1 - (1 - beta)**k_i``. Drawing one
trial per infected edge with ``k`` infected members and infecting on any
success gives the same law. Each vertex that was infected at the start of
the step recovers with probability ``gamma``, once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable

import numpy as np

from ..core import Hypergraph
from ..errors import InvalidParameter, InvalidProbability, UnknownVertex
from ..rng import SeedLike, make_rng
from .trajectory import SIR_COLUMNS, Trajectory

S, I, R = "S", "I", "R"


@dataclass
class SIRConfig:
    beta: float
    gamma: float
    initial_infected: FrozenSet[int] = field(default_factory=frozenset)
    steps: int = 20

    def __post_init__(self):
        for name in ("beta", "gamma"):
            value = float(getattr(self, name))
            if not 0.0 <= value <= 1.0:
                raise InvalidProbability(f"{name} must lie in [0, 1], got {value}")
            setattr(self, name, value)
        if int(self.steps) != self.steps or self.steps < 1:
            raise InvalidParameter(f"steps must be a positive integer, got {self.steps}")
        self.steps = int(self.steps)
        self.initial_infected = frozenset(int(v) for v in self.initial_infected)


def pick_initial_infected(h: Hypergraph, count: int, seed: SeedLike) -> FrozenSet[int]:
    """``count`` distinct vertices chosen uniformly."""
    vertices = h.vertices
    if not 0 <= count <= len(vertices):
        raise InvalidParameter(f"cannot infect {count} of {len(vertices)} vertices")
    rng = make_rng(seed)
    chosen = rng.choice(len(vertices), size=count, replace=False)
    return frozenset(vertices[int(i)] for i in chosen)


def initial_states(h: Hypergraph, infected: Iterable[int]) -> Dict[int, str]:
    states = dict.fromkeys(h.vertices, S)
    for v in infected:
        if v not in states:
            raise UnknownVertex(f"initially infected vertex {v} is not in the hypergraph")
        states[v] = I
    return states


def infection_pressure(h: Hypergraph, states: Dict[int, str]) -> Dict[int, int]:
    """``k_i`` for every susceptible vertex."""
    pressure = {v: 0 for v, st in states.items() if st == S}
    for e in h.edges:
        infected = sum(1 for u in e if states[u] == I)
        if infected:
            for u in e:
                if states[u] == S:
                    pressure[u] += infected
    return pressure


def sir_step(
    h: Hypergraph, states: Dict[int, str], cfg: SIRConfig, rng: SeedLike
) -> Dict[int, str]:
    """Next states, computed from ``states`` only; ``states`` is not modified."""
    rng = make_rng(rng)
    pressure = infection_pressure(h, states)
    new = dict(states)
    escape = 1.0 - cfg.beta
    for v in sorted(states):
        st = states[v]
        if st == S:
            k = pressure[v]
            if k and rng.random() < 1.0 - escape**k:
                new[v] = I
        elif st == I:
            if rng.random() < cfg.gamma:
                new[v] = R
    return new


def counts(states: Dict[int, str]):
    values = list(states.values())
    return values.count(S), values.count(I), values.count(R)


def sir_run(h: Hypergraph, cfg: SIRConfig, seed: SeedLike) -> Trajectory:
    """``cfg.steps`` synchronous steps; rows ``(step, S, I, R)`` from step 0."""
    rng = make_rng(seed)
    states = initial_states(h, cfg.initial_infected)
    traj = Trajectory(SIR_COLUMNS)
    traj.append(0, *counts(states))
    for step in range(1, cfg.steps + 1):
        states = sir_step(h, states, cfg, rng)
        traj.append(step, *counts(states))
    traj.final_state = states
    return traj
