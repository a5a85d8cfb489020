from __future__ import annotations

from typing import Sequence

import numpy as np

from ..errors import EmptyInput, InvalidParameter, LengthMismatch

EPS = np.finfo(float).eps


def _bin_index(v: np.ndarray, bins: int) -> np.ndarray:
    # Scaled directly rather than through bin edges, which cannot be built
    # when the range is only a few ulps wide.
    lo, hi = v.min(), v.max()
    if hi == lo:
        return np.zeros(v.size, dtype=np.intp)
    scaled = (v / 2 - lo / 2) / (hi / 2 - lo / 2) * bins
    return np.clip(np.floor(scaled).astype(np.intp), 0, bins - 1)


def mutual_information(x: Sequence[float], y: Sequence[float], bins: int = 10) -> float:
    """Plug-in mutual information in bits from a ``bins x bins`` histogram.

    Bins are equal-width over each sequence's own [min, max]. Cell
    probabilities are counts over the sample size, so the value does not
    depend on bin width. ``EPS`` keeps empty cells out of the logarithm.
    """
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.size != y.size:
        raise LengthMismatch(f"sequences differ in length: {x.size} vs {y.size}")
    if x.size == 0:
        raise EmptyInput("mutual information needs at least one sample")
    if int(bins) != bins or bins < 1:
        raise InvalidParameter(f"bins must be a positive integer, got {bins}")

    bins = int(bins)
    ix = _bin_index(x, bins)
    iy = _bin_index(y, bins)
    joint = np.bincount(ix * bins + iy, minlength=bins * bins).reshape(bins, bins)
    p_xy = joint / x.size
    p_x = p_xy.sum(axis=1)
    p_y = p_xy.sum(axis=0)
    mi = float(np.sum(p_xy * np.log2((p_xy + EPS) / (np.outer(p_x, p_y) + EPS))))
    return max(mi, 0.0)
