"""Numba versions of the bitmask kernels; imported on demand by ``_kernels``."""

import numpy as np
from numba import njit


@njit(cache=True)
def _popcount_nb(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c

@njit(cache=True)
def creation_nb(i, n):
    size = 1 << n
    targets = np.empty(size, dtype=np.int64)
    signs = np.zeros(size, dtype=np.int64)
    bit = np.int64(1) << i
    for m in range(size):
        if m & bit:
            targets[m] = m
        else:
            targets[m] = m | bit
            signs[m] = 1 - 2 * (_popcount_nb(m & (bit - 1)) & 1)
    return targets, signs

@njit(cache=True)
def derivative_nb(i, n, right):
    size = 1 << n
    targets = np.empty(size, dtype=np.int64)
    signs = np.zeros(size, dtype=np.int64)
    bit = np.int64(1) << i
    for m in range(size):
        if m & bit:
            pos = _popcount_nb(m & (bit - 1)) + 1
            if right:
                expo = _popcount_nb(m) - pos
            else:
                expo = pos - 1
            targets[m] = m ^ bit
            signs[m] = 1 - 2 * (expo & 1)
        else:
            targets[m] = m
    return targets, signs

@njit(cache=True)
def degrees_nb(n):
    size = 1 << n
    out = np.empty(size, dtype=np.int64)
    for m in range(size):
        out[m] = _popcount_nb(m)
    return out
