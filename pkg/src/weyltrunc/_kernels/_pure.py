"""Pure-Python (numpy) kernel backend.

Semantics must match ``_speedups`` exactly: same greedy first-index rule,
same outputs.  The sweep below reflects every still-active row once per
pass; a row finishes after at most |R+| reflections, so the loop count is
bounded by the longest-element length.
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"


def descend(points: np.ndarray, cartan: np.ndarray, to_dominant: bool):
    """Greedy chamber descent of each row of ``points``.

    Returns ``(reps, companions, lengths)`` where ``reps[k]`` is the
    (anti)dominant representative of row k, ``companions[k]`` is
    w_k^{-1}(rho) for the minimal transporter w_k with w_k(rep) == point,
    and ``lengths[k]`` is that transporter's length.
    """
    pts = np.array(points, dtype=np.int64, order="C", copy=True)
    if pts.ndim != 2:
        raise ValueError("points must be a 2-d array")
    n, r = pts.shape
    cols = np.ascontiguousarray(np.array(cartan, dtype=np.int64).T)  # cols[i] = alpha_i
    comp = np.ones((n, r), dtype=np.int64)
    lengths = np.zeros(n, dtype=np.int64)
    while True:
        bad = (pts < 0) if to_dominant else (pts > 0)
        active = bad.any(axis=1)
        if not active.any():
            break
        rows = np.nonzero(active)[0]
        idx = bad[rows].argmax(axis=1)  # first offending coordinate
        v = pts[rows, idx]
        pts[rows] -= v[:, None] * cols[idx]
        c = comp[rows, idx]
        comp[rows] -= c[:, None] * cols[idx]
        lengths[rows] += 1
    return pts, comp, lengths
