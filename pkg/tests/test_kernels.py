import os
import subprocess
import sys

import numpy as np
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from oddcat._kernels import HAVE_NUMBA, rank_mod_p, rank_mod_p_dense
from oddcat.linalg import rank

matrices = arrays(np.int64, st.tuples(st.integers(1, 7), st.integers(1, 7)), elements=st.integers(-4, 4))


def test_small_ranks():
    assert rank_mod_p_dense(np.eye(3, dtype=np.int64)) == 3
    assert rank_mod_p_dense(np.array([[1, 1], [1, 1]])) == 1
    assert rank_mod_p_dense(np.array([[2, 0], [0, 2]]), 2) == 0
    assert rank_mod_p_dense(np.array([[2, 0], [0, 2]]), 3) == 2
    assert rank_mod_p_dense(np.zeros((0, 0), dtype=np.int64)) == 0


@given(matrices, st.sampled_from([2, 3, 5]))
def test_numba_matches_numpy(mat, p):
    assert rank_mod_p_dense(mat, p, use_numba=True) == rank_mod_p_dense(mat, p, use_numba=False)


@given(matrices)
def test_mod_p_rank_bounded_by_rational_rank(mat):
    rows = [{j: int(v) for j, v in enumerate(r) if v} for r in mat]
    assert rank_mod_p(rows, 2) <= rank(rows)


def test_numba_available():
    assert HAVE_NUMBA


def test_fallback_env_var():
    env = dict(os.environ, ODDCAT_NO_NUMBA="1")
    code = "from oddcat import _kernels as k; import numpy as np; print(k.HAVE_NUMBA, k.rank_mod_p_dense(np.eye(4, dtype=np.int64)))"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", "4"]
