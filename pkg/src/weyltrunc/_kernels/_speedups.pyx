# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend: per-row chamber descent in C.

Must match ``_pure.descend`` exactly (same greedy first-index rule).
"""

import numpy as np

BACKEND = "compiled"


def descend(points, cartan, bint to_dominant):
    pts_arr = np.array(points, dtype=np.int64, order="C", copy=True)
    if pts_arr.ndim != 2:
        raise ValueError("points must be a 2-d array")
    cols_arr = np.ascontiguousarray(np.array(cartan, dtype=np.int64).T)
    cdef Py_ssize_t n = pts_arr.shape[0]
    cdef Py_ssize_t r = pts_arr.shape[1]
    comp_arr = np.ones((n, r), dtype=np.int64)
    len_arr = np.zeros(n, dtype=np.int64)

    cdef long long[:, ::1] pts = pts_arr
    cdef long long[:, ::1] cols = cols_arr
    cdef long long[:, ::1] comp = comp_arr
    cdef long long[::1] lengths = len_arr

    cdef Py_ssize_t k, i, j
    cdef long long v, c
    cdef bint found
    for k in range(n):
        while True:
            found = False
            for i in range(r):
                if (pts[k, i] < 0) if to_dominant else (pts[k, i] > 0):
                    found = True
                    break
            if not found:
                break
            v = pts[k, i]
            c = comp[k, i]
            for j in range(r):
                pts[k, j] -= v * cols[i, j]
                comp[k, j] -= c * cols[i, j]
            lengths[k] += 1
    return pts_arr, comp_arr, len_arr
