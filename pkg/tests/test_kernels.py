import os
import subprocess
import sys

import numpy as np
import pytest

from coha import _kernels
from coha.exterior import d_left, d_right, monomial, phi, wedge
from coha.operators import index_of

numba = pytest.importorskip("numba")


@pytest.mark.parametrize("n", range(1, 11))
def test_paths_agree(n):
    assert np.array_equal(_kernels.degrees(n, use_numba=True), _kernels.degrees(n, use_numba=False))
    for i in range(n):
        for a, b in zip(_kernels.creation(i, n, use_numba=True), _kernels.creation(i, n, use_numba=False)):
            assert np.array_equal(a, b)
        for right in (True, False):
            nb = _kernels.derivative(i, n, right, use_numba=True)
            npy = _kernels.derivative(i, n, right, use_numba=False)
            for a, b in zip(nb, npy):
                assert np.array_equal(a, b)


@pytest.mark.parametrize("use_numba", [True, False])
def test_kernels_match_element_calculus(use_numba):
    n = 5
    for i in range(n):
        tc, sc = _kernels.creation(i, n, use_numba=use_numba)
        tr, sr = _kernels.derivative(i, n, True, use_numba=use_numba)
        tl, sl = _kernels.derivative(i, n, False, use_numba=use_numba)
        for m in range(1 << n):
            e = monomial(index_of(m))
            for (t, s), want in (((tc, sc), wedge(phi(i), e)), ((tr, sr), d_right(i, e)), ((tl, sl), d_left(i, e))):
                got = monomial(index_of(int(t[m])), int(s[m])) if s[m] else monomial((), 0)
                assert got == want


def test_index_checked():
    with pytest.raises(ValueError):
        _kernels.creation(3, 3)
    with pytest.raises(ValueError):
        _kernels.derivative(-1, 3)


def test_env_flag_disables_numba():
    code = "from coha import _kernels; print(_kernels.USE_NUMBA)"
    env = dict(os.environ, COHA_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"
    env["COHA_DISABLE_NUMBA"] = "0"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "True"
