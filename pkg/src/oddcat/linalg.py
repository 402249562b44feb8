"""Exact integer linear algebra on sparse vectors.

Vectors are ``dict[column, int]``. Everything here is exact: rational
arithmetic only appears inside elimination and results are checked for
integrality before they leave the module.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Hashable, Iterable, Mapping, Sequence

Vec = dict


class NotInSpan(ArithmeticError):
    """The target vector is outside the span (or lattice) of the basis."""


def _axpy(target: dict, a, row: Mapping) -> None:
    # target += a * row, dropping zeros
    for c, v in row.items():
        nv = target.get(c, 0) + a * v
        if nv:
            target[c] = nv
        else:
            target.pop(c, None)


class SparseEchelon:
    """Incremental echelon form that remembers how rows were combined.

    ``add(v, label)`` inserts a vector; ``coords(y)`` returns the unique
    combination of inserted vectors equal to ``y`` (rational in general).
    Dependent inserts are reported, not stored.
    """

    def __init__(self) -> None:
        self._rows: list[tuple[Hashable, dict, dict]] = []  # (pivot col, row, combo)
        self._pivots: dict[Hashable, int] = {}
        self.labels: list[Hashable] = []

    def __len__(self) -> int:
        return len(self._rows)

    def _reduce(self, v: dict, combo: dict) -> None:
        for pc, row, rc in self._rows:
            a = v.get(pc)
            if a:
                f = Fraction(a) / row[pc] if a % row[pc] else a // row[pc]
                _axpy(v, -f, row)
                _axpy(combo, -f, rc)

    def add(self, vec: Mapping, label: Hashable | None = None) -> bool:
        v = {c: x for c, x in vec.items() if x}
        lab = len(self.labels) if label is None else label
        combo = {lab: 1}
        self._reduce(v, combo)
        if not v:
            return False
        pc = min(v, key=lambda c: (abs(v[c]) != 1, abs(v[c]), _sort_key(c)))
        self._pivots[pc] = len(self._rows)
        self._rows.append((pc, v, combo))
        self.labels.append(lab)
        return True

    def coords(self, vec: Mapping, *, integral: bool = True) -> dict:
        v = {c: x for c, x in vec.items() if x}
        combo: dict = {}
        for pc, row, rc in self._rows:
            a = v.get(pc)
            if a:
                f = Fraction(a) / row[pc] if a % row[pc] else a // row[pc]
                _axpy(v, -f, row)
                _axpy(combo, f, rc)
        if v:
            raise NotInSpan("vector not in span")
        out = {}
        for k, x in combo.items():
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    if integral:
                        raise NotInSpan("coordinates are not integral")
                    out[k] = x
                    continue
                x = int(x)
            if x:
                out[k] = x
        return out

    def contains(self, vec: Mapping) -> bool:
        try:
            self.coords(vec, integral=False)
            return True
        except NotInSpan:
            return False


def _sort_key(c):
    return (str(type(c)), c) if not isinstance(c, (int, tuple, str)) else (0, c)


def rank(vectors: Iterable[Mapping]) -> int:
    ech = SparseEchelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def smith_invariants(rows: Sequence[Mapping]) -> list[int]:
    """Nonzero invariant factors of the integer matrix with the given rows.

    Unit pivots are eliminated sparsely first; whatever is left is handed to
    a dense Smith normal form over Python integers.
    """
    work = [dict((c, int(v)) for c, v in r.items() if v) for r in rows]
    work = [r for r in work if r]
    ones = 0
    col_index: dict = {}
    for ri, r in enumerate(work):
        for c in r:
            col_index.setdefault(c, set()).add(ri)
    alive = set(range(len(work)))
    while True:
        best = None
        for ri in alive:
            r = work[ri]
            for c, v in r.items():
                if v == 1 or v == -1:
                    cost = (len(r) - 1) * (len(col_index[c]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, ri, c)
                    if cost == 0:
                        break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pr, pc = best
        prow = work[pr]
        pv = prow[pc]
        for ri in list(col_index[pc]):
            if ri == pr:
                continue
            r = work[ri]
            a = r[pc] * pv  # pv = +-1 so a/pv = a*pv
            for c, v in prow.items():
                nv = r.get(c, 0) - a * v
                if nv:
                    if c not in r:
                        col_index.setdefault(c, set()).add(ri)
                    r[c] = nv
                else:
                    if c in r:
                        del r[c]
                        col_index[c].discard(ri)
            if not r:
                alive.discard(ri)
        for c in prow:
            col_index[c].discard(pr)
        alive.discard(pr)
        ones += 1
    rest = [work[ri] for ri in sorted(alive) if work[ri]]
    return [1] * ones + dense_smith(rest)


def dense_smith(rows: Sequence[Mapping]) -> list[int]:
    """Invariant factors through the textbook Smith normal form algorithm."""
    if not rows:
        return []
    cols = sorted({c for r in rows for c in r}, key=_sort_key)
    cidx = {c: i for i, c in enumerate(cols)}
    A = [[0] * len(cols) for _ in rows]
    for i, r in enumerate(rows):
        for c, v in r.items():
            A[i][cidx[c]] = int(v)
    m, n = len(A), len(cols)
    diag = []
    t = 0
    while t < min(m, n):
        # find nonzero entry of minimal absolute value in the trailing block
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i, j = piv
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for row in A:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if done:
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad])]
                continue
            # move the smallest remaining entry of row/col t into the corner
            best = (abs(A[t][t]), t, t)
            for i in range(t + 1, m):
                if A[i][t] and abs(A[i][t]) < best[0]:
                    best = (abs(A[i][t]), i, t)
            for j in range(t + 1, n):
                if A[t][j] and abs(A[t][j]) < best[0]:
                    best = (abs(A[t][j]), t, j)
            _, i, j = best
            if i != t:
                A[t], A[i] = A[i], A[t]
            if j != t:
                for row in A:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def is_saturated(rows: Sequence[Mapping]) -> bool:
    """True when the row lattice has torsion-free cokernel in its span."""
    return all(d == 1 for d in smith_invariants(rows))


def int_inverse(M: Sequence[Sequence[int]]) -> list[list[int]]:
    """Inverse of a unimodular integer matrix; raises if not unimodular."""
    n = len(M)
    A = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if A[r][col] != 0 and (piv is None or abs(A[r][col]) < abs(A[piv][col])):
                piv = r
        if piv is None:
            raise ArithmeticError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [v / p for v in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    out = []
    for row in A:
        vals = row[n:]
        if any(v.denominator != 1 for v in vals):
            raise ArithmeticError("matrix is not unimodular")
        out.append([int(v) for v in vals])
    return out


def mat_vec(M: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def content(vec: Mapping) -> int:
    g = 0
    for v in vec.values():
        g = gcd(g, int(v))
    return g
