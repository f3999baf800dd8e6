"""Basis-action kernels on the bitmask basis of the exterior algebra.

Monomial ``phi_{k_1} ^ ... ^ phi_{k_d}`` is the integer with bits ``k_j`` set.
Each kernel returns ``(targets, signs)`` over all ``2**n`` masks: column
``m`` of the operator is ``signs[m] * e_{targets[m]}`` (``signs[m] == 0``
means the column vanishes).

The numba path is available when numba is installed and ``COHA_DISABLE_NUMBA``
is unset or ``0``.  It is imported lazily and, unless forced with
``use_numba=True``, only used from ``NUMBA_MIN_N`` generators up: below that
the numpy path finishes faster than numba loads.  Both produce identical arrays.
"""

import importlib.util
import os

import numpy as np

_flag = os.environ.get("COHA_DISABLE_NUMBA", "0").strip().lower()
USE_NUMBA = importlib.util.find_spec("numba") is not None and _flag in ("", "0", "false", "no", "off")
NUMBA_MIN_N = 16

# ---- numpy path -------------------------------------------------------------


def _popcount_np(a):
    return np.bitwise_count(a).astype(np.int64)


def _masks(n):
    return np.arange(1 << n, dtype=np.int64)


def creation_np(i, n):
    m = _masks(n)
    bit = np.int64(1) << i
    present = (m & bit) != 0
    below = _popcount_np(m & (bit - 1))
    signs = np.where(present, 0, 1 - 2 * (below & 1)).astype(np.int64)
    targets = np.where(present, m, m | bit)
    return targets, signs


def derivative_np(i, n, right):
    m = _masks(n)
    bit = np.int64(1) << i
    present = (m & bit) != 0
    pos = _popcount_np(m & (bit - 1)) + 1
    if right:
        expo = _popcount_np(m) - pos
    else:
        expo = pos - 1
    signs = np.where(present, 1 - 2 * (expo & 1), 0).astype(np.int64)
    targets = np.where(present, m ^ bit, m)
    return targets, signs


def degrees_np(n):
    return _popcount_np(_masks(n))


# ---- numba path (see _kernels_nb) --------------------------------------------


def _numba():
    from . import _kernels_nb

    return _kernels_nb


def _check(i, n):
    if n < 0 or n > 30:
        raise ValueError(f"basis size 2**{n} out of range")
    if not 0 <= i < n:
        raise ValueError(f"generator {i} outside 0..{n - 1}")


def _want_numba(n, use_numba):
    if use_numba is None:
        return USE_NUMBA and n >= NUMBA_MIN_N
    return use_numba


def creation(i, n, use_numba=None):
    """Left wedge with ``phi_i``."""
    _check(i, n)
    if _want_numba(n, use_numba):
        return _numba().creation_nb(i, n)
    return creation_np(i, n)


def derivative(i, n, right=True, use_numba=None):
    """Right (``(-1)^(d-p)``) or left (``(-1)^(p-1)``) partial derivative by ``phi_i``."""
    _check(i, n)
    if _want_numba(n, use_numba):
        return _numba().derivative_nb(i, n, right)
    return derivative_np(i, n, right)


def degrees(n, use_numba=None):
    if _want_numba(n, use_numba):
        return _numba().degrees_nb(n)
    return degrees_np(n)
