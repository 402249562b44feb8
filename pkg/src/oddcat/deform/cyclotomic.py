"""The matrix X, its powers, the matrix C = a^n(X) and ideal certificates.

Elements of OPol_k ⊗ A_n are stored as ``{(exponent, A-monomial): coeff}``
with the product ``(f ⊗ a)(g ⊗ b) = (-1)^{|a||g|} fg ⊗ ab``.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Mapping

from ..oddsym import complete, elementary
from ..skewpoly import SkewPoly, mono_mul_sign
from .an import AMono, c_mono, mono_mul, one_mono
from .grassmannian import grassmannian


class OLA:
    """Element of OPol_k ⊗ A_n."""

    __slots__ = ("k", "n", "terms")

    def __init__(self, k: int, n: int, terms: Mapping | None = None):
        self.k, self.n = k, n
        self.terms = {key: c for key, c in (terms or {}).items() if c}

    @classmethod
    def from_poly(cls, f: SkewPoly, n: int) -> "OLA":
        one = one_mono(n)
        return cls(f.n, n, {(e, one): c for e, c in f.terms.items()})

    @classmethod
    def from_a(cls, a: AMono, k: int, n: int, c: int = 1) -> "OLA":
        return cls(k, n, {((0,) * k, a): c})

    @classmethod
    def zero(cls, k: int, n: int) -> "OLA":
        return cls(k, n)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "OLA") -> "OLA":
        acc = dict(self.terms)
        for key, c in other.terms.items():
            acc[key] = acc.get(key, 0) + c
        return OLA(self.k, self.n, acc)

    def __neg__(self) -> "OLA":
        return OLA(self.k, self.n, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other: "OLA") -> "OLA":
        return self + (-other)

    def scale(self, c: int) -> "OLA":
        return OLA(self.k, self.n, {key: c * v for key, v in self.terms.items()})

    def __mul__(self, other: "OLA") -> "OLA":
        acc: dict = {}
        for (e, a), ca in self.terms.items():
            for (f, b), cb in other.terms.items():
                ab = mono_mul(self.n, a, b)
                if ab is None:
                    continue
                s = mono_mul_sign(e, f)
                if a[1] and sum(f) % 2:
                    s = -s
                key = (tuple(x + y for x, y in zip(e, f)), ab)
                acc[key] = acc.get(key, 0) + s * ca * cb
        return OLA(self.k, self.n, acc)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OLA) and (self.k, self.n) == (other.k, other.n) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"OLA(k={self.k}, n={self.n}, {self.terms})"

    def to_mkn(self) -> dict:
        """Image in M_k^n (box-basis coordinates); input must be odd symmetric."""
        g = grassmannian(self.k, self.n)
        by_a: dict[AMono, dict] = {}
        for (e, a), c in self.terms.items():
            by_a.setdefault(a, {})[e] = c
        acc: dict = {}
        for a, poly in by_a.items():
            img = g.right_a(g.from_ol(SkewPoly(self.k, poly)), a)
            acc = g.add(acc, img)
        return acc


# ---------------------------------------------------------------- X and its powers

def matrix_X(k: int) -> list[list[SkewPoly]]:
    """First column ±ε_i, ones on the superdiagonal."""
    zero, one = SkewPoly.zero(k), SkewPoly.one(k)
    rows = []
    for i in range(1, k + 1):
        row = [zero] * k
        row[0] = elementary(i, k).scale((-1) ** comb(i - 1, 2))
        if i < k:
            row[i] = one
        rows.append(row)
    return rows


def mat_mul(A: list[list[SkewPoly]], B: list[list[SkewPoly]]) -> list[list[SkewPoly]]:
    k = len(A)
    out = []
    for i in range(k):
        row = []
        for j in range(k):
            acc = SkewPoly.zero(A[0][0].n)
            for l in range(k):
                if A[i][l] and B[l][j]:
                    acc = acc + A[i][l] * B[l][j]
            row.append(acc)
        out.append(row)
    return out


def x_power_literal(k: int, m: int) -> list[list[SkewPoly]]:
    one, zero = SkewPoly.one(k), SkewPoly.zero(k)
    out = [[one if i == j else zero for j in range(k)] for i in range(k)]
    X = matrix_X(k)
    for _ in range(m):
        out = mat_mul(out, X)
    return out


@lru_cache(maxsize=None)
def x_power_entry(k: int, m: int, i: int, j: int) -> SkewPoly:
    """Entry (i, j) of X^m from the triangular recursion (1-based indices)."""
    if j > m:
        return SkewPoly.one(k) if i + m == j else SkewPoly.zero(k)
    out = complete(m + i - j, k) if m + i - j >= 0 else SkewPoly.zero(k)
    for l in range(1, i):
        b = x_power_entry(k, m, i - l, j)
        if b:
            out = out - complete(l, k) * b
    return out


def x_power_entries(k: int, m: int) -> list[list[SkewPoly]]:
    return [[x_power_entry(k, m, i, j) for j in range(1, k + 1)] for i in range(1, k + 1)]


def recursion_matches_powers(k: int, m: int) -> bool:
    return x_power_entries(k, m) == x_power_literal(k, m)


# ---------------------------------------------------------------- C = a^n(X)

def h_prime_ola(m: int, k: int, n: int) -> OLA:
    """``sum_r (-1)^r h_{m-r} ⊗ c_r``."""
    out = OLA.zero(k, n)
    for r in range(0, m + 1):
        cm = c_mono(r, n)
        if cm is None:
            continue
        out = out + OLA.from_poly(complete(m - r, k), n) * OLA.from_a(cm, k, n, (-1) ** r)
    return out


def c_entry(k: int, n: int, i: int, j: int) -> OLA:
    """``C_ij = (-1)^n sum_r (-1)^r b^{n-r}_ij ⊗ c_r``."""
    out = OLA.zero(k, n)
    for r in range(0, n + 1):
        cm = c_mono(r, n)
        if cm is None:
            continue
        b = x_power_entry(k, n - r, i, j)
        if b:
            out = out + OLA.from_poly(b, n) * OLA.from_a(cm, k, n, (-1) ** (n + r))
    return out


def _ola_add(acc: dict, m: int, x: OLA) -> None:
    acc[m] = acc[m] + x if m in acc else x


def _hp_certificate(k: int, n: int, top: int) -> dict[int, OLA]:
    """Left coefficients writing h'_top through the generators h'_{n-k+1..n}."""
    lo = n - k + 1
    if lo <= top <= n:
        return {top: OLA.from_poly(SkewPoly.one(k), n)}
    if top < lo:
        raise ValueError("index below the generating range")
    out: dict[int, OLA] = {}
    for i in range(1, k + 1):
        eps = OLA.from_poly(elementary(i, k), n).scale(-((-1) ** comb(i + 1, 2)))
        for m, L in _hp_certificate(k, n, top - i).items():
            _ola_add(out, m, eps * L)
    return out


def ideal_certificate(k: int, n: int, i: int, j: int) -> dict[int, OLA]:
    """``{m: L_m}`` with C_ij = sum_m L_m h'_m, built by induction on i."""
    out: dict[int, OLA] = {}
    sign = (-1) ** n
    for m, L in _hp_certificate(k, n, n + i - j).items():
        _ola_add(out, m, L.scale(sign))
    # C_ij = (-1)^n h'_{n+i-j} - sum_l h_l C_{i-l,j}
    for l in range(1, i):
        h = OLA.from_poly(complete(l, k), n).scale(-1)
        for m, L in ideal_certificate(k, n, i - l, j).items():
            _ola_add(out, m, h * L)
    return out


def check_certificate(k: int, n: int, i: int, j: int) -> tuple[bool, int]:
    """Verify a certificate; returns (ok, number of generator terms used)."""
    cert = ideal_certificate(k, n, i, j)
    total = OLA.zero(k, n)
    for m, L in cert.items():
        total = total + L * h_prime_ola(m, k, n)
    nonzero = sum(1 for L in cert.values() if not L.is_zero())
    return total == c_entry(k, n, i, j), nonzero


def c_entries_vanish_in_mkn(k: int, n: int) -> bool:
    """Every C_ij is zero in M_k^n (independent of the certificates)."""
    return all(not c_entry(k, n, i, j).to_mkn() for i in range(1, k + 1) for j in range(1, k + 1))
