"""Dense modular rank, compiled with numba when available.

Set ``ODDCAT_NO_NUMBA=1`` to force the pure numpy path. Both paths share the
same elimination order, so they return identical results.
"""

from __future__ import annotations

import os
from typing import Hashable, Mapping, Sequence

import numpy as np

_DISABLED = os.environ.get("ODDCAT_NO_NUMBA", "") not in ("", "0")


def _rank_mod_p_numpy(mat: np.ndarray, p: int) -> int:
    a = mat.copy() % p
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = np.nonzero(a[r + 1:, c])[0] + r + 1
        if below.size:
            a[below] = (a[below] - np.outer(a[below, c], a[r])) % p
        r += 1
    return r


try:  # pragma: no cover - exercised through the benchmark and fallback tests
    if _DISABLED:
        raise ImportError
    from numba import njit

    @njit(cache=True)
    def _rank_mod_p_jit(a, p):
        rows, cols = a.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = -1
            for i in range(r, rows):
                if a[i, c] % p != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(cols):
                    t = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = t
            # modular inverse by Fermat
            base = a[r, c] % p
            inv = 1
            e = p - 2
            while e > 0:
                if e & 1:
                    inv = (inv * base) % p
                base = (base * base) % p
                e >>= 1
            for j in range(cols):
                a[r, j] = (a[r, j] * inv) % p
            for i in range(r + 1, rows):
                f = a[i, c] % p
                if f != 0:
                    for j in range(cols):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
            r += 1
        return r

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def rank_mod_p_dense(mat: np.ndarray, p: int = 2, *, use_numba: bool | None = None) -> int:
    """Rank of an integer matrix over GF(p), p prime."""
    if mat.size == 0:
        return 0
    a = np.ascontiguousarray(np.asarray(mat, dtype=np.int64) % p)
    jit = HAVE_NUMBA if use_numba is None else (use_numba and HAVE_NUMBA)
    if jit:
        return int(_rank_mod_p_jit(a, p))
    return _rank_mod_p_numpy(a, p)


def densify(vectors: Sequence[Mapping[Hashable, int]]) -> np.ndarray:
    cols: dict = {}
    for v in vectors:
        for c in v:
            if c not in cols:
                cols[c] = len(cols)
    out = np.zeros((len(vectors), len(cols)), dtype=np.int64)
    for i, v in enumerate(vectors):
        for c, x in v.items():
            out[i, cols[c]] = x
    return out


def rank_mod_p(vectors: Sequence[Mapping[Hashable, int]], p: int = 2, *, use_numba: bool | None = None) -> int:
    """Rank over GF(p) of sparse integer vectors."""
    return rank_mod_p_dense(densify(vectors), p, use_numba=use_numba)
