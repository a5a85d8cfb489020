"""Seeding rules.

Every random operation takes ``seed``: an integer in [0, 2**64) or an
existing ``numpy.random.Generator``. Integers are turned into a fresh PCG64
generator, so one call with one seed always consumes the same stream.
Ensembles of independent runs get their per-run seeds from
``SeedSequence(seed).spawn(k)``; run ``i`` always receives child ``i``.
"""

from __future__ import annotations

from typing import List, Union

import numpy as np

from .errors import InvalidParameter

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator]

MAX_SEED = 2**64 - 1


def make_rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.PCG64(seed))
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise InvalidParameter(f"seed must be an integer, got {seed!r}")
    if not 0 <= int(seed) <= MAX_SEED:
        raise InvalidParameter(f"seed must be in [0, 2**64), got {seed}")
    return np.random.Generator(np.random.PCG64(int(seed)))


def spawn_seeds(seed: int, count: int) -> List[np.random.SeedSequence]:
    """Independent child seed sequences for ``count`` runs."""
    make_rng(seed)  # validation only
    return np.random.SeedSequence(int(seed)).spawn(count)
