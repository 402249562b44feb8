"""Odd symmetric polynomials: generators, Schur and Schubert families, bases.

An odd symmetric polynomial is determined by its coefficients on the
partition monomials ``x^lambda`` (lambda weakly decreasing), because every
ε-product ε_{λ'} has leading monomial ±x^λ. All basis changes below go through
that coordinate system, so each is a small square integer solve.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .linalg import SparseEchelon, int_inverse, mat_vec
from .skewpoly import Exp, Permutation, SkewPoly, delta, mono_mul_sign, monomials

_lock = threading.Lock()


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        p = tuple(int(v) for v in parts if v)
        if any(a < b for a, b in zip(p, p[1:])) or any(v < 0 for v in p):
            raise ValueError(f"not a partition: {p}")
        return super().__new__(cls, p)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def dual(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for v in self if v > j) for j in range(self[0]))

    def padded(self, n: int) -> Exp:
        if len(self) > n:
            raise ValueError(f"{self} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


def partitions(total: int, max_len: int | None = None, max_part: int | None = None) -> list[Partition]:
    """Partitions of ``total``, listed in decreasing lexicographic order."""
    out: list[Partition] = []

    def rec(rem: int, cap: int, acc: list[int]) -> None:
        if rem == 0:
            out.append(Partition(acc))
            return
        if max_len is not None and len(acc) >= max_len:
            return
        for v in range(min(rem, cap), 0, -1):
            acc.append(v)
            rec(rem - v, v, acc)
            acc.pop()

    cap = total if max_part is None else max_part
    rec(total, cap, [])
    return out


def box_partitions(rows: int, cols: int) -> list[Partition]:
    """All partitions fitting in a ``rows x cols`` box, by size then lex."""
    out = []
    for t in range(rows * cols + 1):
        out.extend(sorted(partitions(t, rows, cols), reverse=True))
    return out


# ---------------------------------------------------------------- generators

def _tilde_sign(idx: Sequence[int]) -> int:
    return -1 if sum(i - 1 for i in idx) & 1 else 1


@lru_cache(maxsize=None)
def elementary(k: int, n: int) -> SkewPoly:
    """Odd elementary polynomial: sum over i_1 < ... < i_k of tilde-x products."""
    if k < 0 or k > n:
        return SkewPoly.zero(n)
    terms: dict[Exp, int] = {}
    from itertools import combinations

    for idx in combinations(range(1, n + 1), k):
        e = [0] * n
        for i in idx:
            e[i - 1] = 1
        terms[tuple(e)] = _tilde_sign(idx)
    return SkewPoly(n, terms)


@lru_cache(maxsize=None)
def complete(k: int, n: int) -> SkewPoly:
    """Odd complete polynomial: sum over i_1 <= ... <= i_k of tilde-x products."""
    if k < 0:
        return SkewPoly.zero(n)
    terms: dict[Exp, int] = {}
    for e in monomials(n, k):
        # weakly increasing index words are already normal ordered
        s = sum(e[i] * i for i in range(n))
        terms[e] = -1 if s & 1 else 1
    return SkewPoly(n, terms)


def eps_product(parts: Sequence[int], n: int) -> SkewPoly:
    out = SkewPoly.one(n)
    for p in parts:
        out = out * elementary(p, n)
    return out


@lru_cache(maxsize=None)
def h_product(parts: tuple[int, ...], n: int) -> SkewPoly:
    if not parts:
        return SkewPoly.one(n)
    return h_product(parts[:-1], n) * complete(parts[-1], n)


def is_odd_symmetric(f: SkewPoly) -> bool:
    return all(not f.dd(i) for i in range(1, f.n))


class OddSymElement(SkewPoly):
    """A skew polynomial checked to lie in the kernel of every d_i."""

    __slots__ = ()

    @classmethod
    def from_poly(cls, f: SkewPoly, check: bool = True) -> "OddSymElement":
        if check and not is_odd_symmetric(f):
            raise ValueError("polynomial is not odd symmetric")
        return cls(f.n, f.terms, _trusted=True)


def elem_complete_check(l: int, n: int) -> bool:
    """sum_j (-1)^{j(j+1)/2} eps_j h_{l-j} vanishes for l >= 1."""
    tot = SkewPoly.zero(n)
    for j in range(l + 1):
        tot = tot + (elementary(j, n) * complete(l - j, n)).scale((-1) ** (j * (j + 1) // 2))
    return tot.is_zero()


def e_relations(n: int) -> list[tuple[str, int, int, bool]]:
    """Evaluate the three families of ε-relations for all admissible indices."""
    e = lambda j: elementary(j, n)  # noqa: E731
    out = []
    for m in range(0, n + 1):
        for i in range(1, 2 * m):
            if 1 <= i and 1 <= 2 * m - i <= n and i <= n:
                ok = e(i) * e(2 * m - i) == e(2 * m - i) * e(i)
                out.append(("even", i, m, ok))
        for i in range(1, 2 * m + 1):
            if 1 <= i and 1 <= 2 * m - i <= n - 1 and i <= n - 1:
                s = (-1) ** i
                lhs = e(i) * e(2 * m + 1 - i) + (e(2 * m + 1 - i) * e(i)).scale(s)
                rhs = (e(i + 1) * e(2 * m - i)).scale(s) + e(2 * m - i) * e(i + 1)
                out.append(("odd", i, m, lhs == rhs))
        if 1 < 2 * m <= n - 1:
            ok = e(1) * e(2 * m) + e(2 * m) * e(1) == e(2 * m + 1).scale(2)
            out.append(("edge", 1, m, ok))
    return out


# ---------------------------------------------------------------- Schur / Schubert

def w0_dd_word(n: int) -> tuple[int, ...]:
    return tuple(j for top in range(1, n) for j in range(top, 0, -1))


@lru_cache(maxsize=None)
def schur(lam: tuple[int, ...], n: int) -> SkewPoly:
    """``(-1)^C(n,3) w0( d_{w0}(x^lambda x^delta) )``."""
    lam = Partition(lam)
    if len(lam) > n:
        return SkewPoly.zero(n)
    a = lam.padded(n)
    d = delta(n)
    f = SkewPoly(n, {tuple(p + q for p, q in zip(a, d)): mono_mul_sign(a, d)})
    g = f.dd_word(w0_dd_word(n)).act(Permutation.longest(n))
    return g.scale((-1) ** comb(n, 3))


@lru_cache(maxsize=None)
def _schubert(w: tuple[int, ...]) -> SkewPoly:
    n = len(w)
    perm = Permutation(w)
    u = perm.inverse() * Permutation.longest(n)
    return SkewPoly.monomial(delta(n)).dd_word(u.reduced_word())


def schubert(w: Permutation) -> SkewPoly:
    """``d_{w^{-1} w0}(x^delta)`` along the canonical word of ``w^{-1} w0``."""
    return _schubert(w.oneline)


# ---------------------------------------------------------------- coordinates on OL_n

def dominant_vector(f: SkewPoly) -> dict[Partition, int]:
    """Coefficients of f on partition monomials."""
    out = {}
    for e, c in f.terms.items():
        if all(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            out[Partition(e)] = c
    return out


class OLBasis:
    """A Z-basis of one graded piece of OL_n and its coordinate map.

    ``kind`` is one of ``h`` (h_λ with at most n parts), ``h_parts``
    (h_λ with parts at most n), ``eps`` (ε_λ with parts at most n) or
    ``schur`` (s_λ with at most n parts).
    """

    def __init__(self, n: int, total: int, kind: str = "h"):
        self.n, self.total, self.kind = n, total, kind
        rows = partitions(total, max_len=n)
        if kind in ("h", "schur"):
            labels = partitions(total, max_len=n)
        elif kind in ("h_parts", "eps"):
            labels = partitions(total, max_part=n)
        else:
            raise ValueError(f"unknown basis kind {kind!r}")
        self.labels = labels
        self.rows = rows
        self.elements = [self.element(lab) for lab in labels]
        M = [[0] * len(labels) for _ in rows]
        ridx = {r: i for i, r in enumerate(rows)}
        for j, el in enumerate(self.elements):
            for lam, c in dominant_vector(el).items():
                M[ridx[lam]][j] = c
        if len(rows) != len(labels):
            raise ArithmeticError("basis size does not match the partition count")
        self.matrix = M
        self.inverse = int_inverse(M)
        self._ridx = ridx

    def element(self, lam: Partition) -> SkewPoly:
        n = self.n
        if self.kind in ("h", "h_parts"):
            return h_product(tuple(lam), n)
        if self.kind == "eps":
            return eps_product(lam, n)
        return schur(tuple(lam), n)

    def coords(self, f: SkewPoly, verify: bool = False) -> dict[Partition, int]:
        vec = [0] * len(self.rows)
        for lam, c in dominant_vector(f).items():
            if sum(lam) != self.total:
                raise ValueError("degree mismatch")
            vec[self._ridx[lam]] = c
        sol = mat_vec(self.inverse, vec)
        out = {lab: c for lab, c in zip(self.labels, sol) if c}
        if verify:
            back = SkewPoly.zero(self.n)
            for lab, c in out.items():
                back = back + self.element(lab).scale(c)
            if back != f:
                raise ArithmeticError("element is not odd symmetric")
        return out


_basis_cache: dict[tuple[int, int, str], OLBasis] = {}


def ol_basis(n: int, total: int, kind: str = "h") -> OLBasis:
    key = (n, total, kind)
    b = _basis_cache.get(key)
    if b is None:
        with _lock:
            b = _basis_cache.get(key)
            if b is None:
                b = OLBasis(n, total, kind)
                _basis_cache[key] = b
    return b


def ol_expand(f: SkewPoly, kind: str = "h", verify: bool = False) -> dict[Partition, int]:
    """Coordinates of a homogeneous odd symmetric polynomial."""
    if f.is_zero():
        return {}
    return ol_basis(f.n, f.max_total(), kind).coords(f, verify=verify)


def transition_matrix(n: int, total: int, source: str, target: str) -> dict[Partition, dict[Partition, int]]:
    """Rows: source basis elements written in the target basis."""
    src = ol_basis(n, total, source)
    tgt = ol_basis(n, total, target)
    return {lab: tgt.coords(el) for lab, el in zip(src.labels, src.elements)}


def lex_greater(mu: Partition, lam: Partition) -> bool:
    return tuple(mu) > tuple(lam)


def lr_coefficients(mu: Sequence[int], nu: Sequence[int], n: int) -> dict[Partition, int]:
    """Odd Littlewood–Richardson numbers by solving against the Schur basis."""
    prod = schur(tuple(Partition(mu)), n) * schur(tuple(Partition(nu)), n)
    return ol_expand(prod, "schur", verify=True)


# ---------------------------------------------------------------- right OL-coordinates

class RightCoordinates:
    """Writes f in OPol_n as sum_b b * c_b with b from a module basis and c_b in OL_n.

    ``module`` is ``monomial`` (x^γ with γ_i <= n - i) or ``schubert``.
    OL-coefficients are returned in the h-basis (at most n parts).
    """

    def __init__(self, n: int, module: str = "monomial"):
        self.n = n
        self.module = module
        if module == "monomial":
            self.keys = [g for g in _box_exps(n)]
            self.gens = {g: SkewPoly.monomial(g) for g in self.keys}
        elif module == "schubert":
            self.keys = [w.oneline for w in Permutation.all(n)]
            self.gens = {k: schubert(Permutation(k)) for k in self.keys}
        else:
            raise ValueError(module)
        self._ech: dict[int, SparseEchelon] = {}

    def _echelon(self, total: int) -> SparseEchelon:
        ech = self._ech.get(total)
        if ech is None:
            ech = SparseEchelon()
            for g in self.keys:
                gd = self.gens[g].max_total()
                if gd > total or gd < 0:
                    continue
                for lam in partitions(total - gd, max_len=self.n):
                    v = self.gens[g] * h_product(tuple(lam), self.n)
                    ech.add(v.terms, (g, lam))
            self._ech[total] = ech
        return ech

    def coords(self, f: SkewPoly) -> dict[tuple, dict[Partition, int]]:
        out: dict[tuple, dict[Partition, int]] = {}
        for total, comp in f.components().items():
            for (g, lam), c in self._echelon(total).coords(comp.terms).items():
                out.setdefault(g, {})[lam] = c
        return out


def _box_exps(n: int) -> list[Exp]:
    out: list[Exp] = [()]
    for i in range(1, n + 1):
        out = [e + (a,) for e in out for a in range(n - i + 1)]
    return sorted(out, key=lambda e: (sum(e), tuple(-v for v in e)))


_rc_cache: dict[tuple[int, str], RightCoordinates] = {}


def right_coordinates(n: int, module: str = "monomial") -> RightCoordinates:
    key = (n, module)
    rc = _rc_cache.get(key)
    if rc is None:
        with _lock:
            rc = _rc_cache.setdefault(key, RightCoordinates(n, module))
    return rc


def ol_coordinates(f: SkewPoly) -> dict[Permutation, SkewPoly]:
    """Right OL-coordinates of f against the Schubert basis."""
    rc = right_coordinates(f.n, "schubert")
    out = {}
    for w, coeffs in rc.coords(f).items():
        c = SkewPoly.zero(f.n)
        for lam, v in coeffs.items():
            c = c + h_product(tuple(lam), f.n).scale(v)
        if c:
            out[Permutation(w)] = c
    return out


# ---------------------------------------------------------------- h-word straightening

def straighten_h(word: Sequence[int]) -> dict[tuple[int, ...], int]:
    """Rewrite h_{r_1}...h_{r_m} as a combination of weakly decreasing words."""
    return dict(_straighten(tuple(v for v in word if v != 0)))


@lru_cache(maxsize=None)
def _straighten(word: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    if any(v < 0 for v in word):
        return ()
    pos = next((i for i in range(len(word) - 1) if word[i] < word[i + 1]), None)
    if pos is None:
        return ((word, 1),)
    p, l = word[pos], word[pos + 1]
    pre, post = word[:pos], word[pos + 2:]
    pieces: list[tuple[tuple[int, ...], int]] = []
    if (p + l) % 2 == 0:
        pieces.append(((l, p), 1))
    elif p % 2 == 0:
        pieces.append(((l, p), 1))
        for i in range(1, p + 1):
            pieces.append(((l + i, p - i), 2 * (-1) ** comb(i, 2)))
    else:
        pieces.append(((l, p), -1))
        for i in range(1, p + 1):
            pieces.append(((l + i, p - i), 2 * (-1) ** comb(i - 1, 2)))
    acc: dict[tuple[int, ...], int] = {}
    for mid, c in pieces:
        new = tuple(v for v in pre + mid + post if v != 0)
        for w, d in _straighten(new):
            acc[w] = acc.get(w, 0) + c * d
    return tuple((w, c) for w, c in sorted(acc.items()) if c)
