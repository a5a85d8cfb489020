"""Dynamical processes on hypergraphs."""

from .information import mutual_information
from .schelling import (
    SchellingState,
    mean_coefficient,
    neighborhood_coefficient,
    schelling_run,
    schelling_step,
)
from .sir import SIRConfig, initial_states, pick_initial_infected, sir_run, sir_step
from .trajectory import Trajectory
from .walk import TransitionMatrix, random_walk, stationary_distribution, transition_matrix

__all__ = [
    "SIRConfig",
    "SchellingState",
    "Trajectory",
    "TransitionMatrix",
    "initial_states",
    "mean_coefficient",
    "mutual_information",
    "neighborhood_coefficient",
    "pick_initial_infected",
    "random_walk",
    "schelling_run",
    "schelling_step",
    "sir_run",
    "sir_step",
    "stationary_distribution",
    "transition_matrix",
]
