"""The odd Grassmannian algebra M_k^n = (OL_k ⊗ A_n) / <h'_m : n-k < m <= n>.

Elements are stored over the box basis ``h_λ ⊗ a`` (λ inside the k x (n-k)
box, a an A_n monomial) as ``{(λ, a): coeff}``. Products are formed on
representatives and pushed back into the box by two moves: rewrite an
h-word in OL_k on the basis {h_μ : l(μ) <= k}, then trade a leading h_m with
m > n-k for lower ones using h'_m = 0.
"""

from __future__ import annotations

import threading
from typing import Iterable, Mapping, Sequence

from ..oddsym import Partition, box_partitions, complete, elementary, h_product, ol_basis
from ..skewpoly import SkewPoly
from .an import AMono, AnScalar, c_mono, mono_degree, mono_mul, monomials_of_degree, one_mono

Key = tuple[tuple[int, ...], AMono]
Elt = dict  # {(λ, a): int}


def _add(acc: dict, key, c: int) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class Grassmannian:
    """Arithmetic in M_k^n."""

    def __init__(self, k: int, n: int):
        if not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
        self.k, self.n = k, n
        self.box = [tuple(p) for p in box_partitions(k, n - k)]
        self._box_set = set(self.box)
        self._word_cache: dict[tuple[int, ...], dict] = {}
        self._prod_cache: dict[tuple[tuple[int, ...], tuple[int, ...]], dict] = {}
        self._lock = threading.Lock()
        self.one_a = one_mono(n)

    # ---------------------------------------------------------------- basics
    @property
    def unit(self) -> Elt:
        return {((), self.one_a): 1}

    def key_degree(self, key: Key) -> int:
        lam, a = key
        return 2 * sum(lam) + mono_degree(a)

    def key_parity(self, key: Key) -> int:
        lam, a = key
        return (sum(lam) + a[1]) % 2

    def basis(self, degree: int) -> list[Key]:
        out = []
        for lam in self.box:
            rest = degree - 2 * sum(lam)
            for a in monomials_of_degree(self.n, rest):
                out.append((lam, a))
        return out

    def grdim_counts(self, bound: int) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for deg in range(0, bound + 1, 2):
            for key in self.basis(deg):
                kk = (deg, self.key_parity(key))
                out[kk] = out.get(kk, 0) + 1
        return out

    # ---------------------------------------------------------------- reduction
    def reduce_word(self, word: Sequence[int]) -> Elt:
        """``h_{w_1} ... h_{w_r} ⊗ 1`` on the box basis."""
        w = tuple(v for v in word if v)
        if any(v < 0 for v in w):
            return {}
        hit = self._word_cache.get(w)
        if hit is not None:
            return hit
        res = self._reduce_word(w)
        self._word_cache[w] = res
        return res

    def _reduce_word(self, w: tuple[int, ...]) -> Elt:
        k, n = self.k, self.n
        if not w:
            return dict(self.unit)
        if k == 0:
            return {}
        if w in self._box_set:
            return {(w, self.one_a): 1}
        sorted_ok = all(a >= b for a, b in zip(w, w[1:])) and len(w) <= k
        if sorted_ok:
            coords = {Partition(w): 1}
        else:
            coords = ol_basis(k, sum(w), "h").coords(h_product(w, k))
        acc: dict = {}
        for mu, c in coords.items():
            mu = tuple(mu)
            if mu[0] <= n - k:
                _add(acc, (mu, self.one_a), c)
                continue
            top, rest = mu[0], mu[1:]
            rest_deg = sum(rest)
            # h_top = -sum_{r>=1} (-1)^r h_{top-r} ⊗ c_r ; c_r moves past h_rest
            for r in range(1, top + 1):
                cm = c_mono(r, n)
                if cm is None:
                    continue
                sign = -((-1) ** r) * ((-1) ** (r * rest_deg))
                sub = self.reduce_word((top - r,) + rest)
                for (lam, a), v in sub.items():
                    m = mono_mul(n, a, cm)
                    if m is not None:
                        _add(acc, (lam, m), c * sign * v)
        return acc

    def _prod(self, lam: tuple[int, ...], mu: tuple[int, ...]) -> Elt:
        key = (lam, mu)
        hit = self._prod_cache.get(key)
        if hit is None:
            hit = self.reduce_word(lam + mu)
            self._prod_cache[key] = hit
        return hit

    # ---------------------------------------------------------------- algebra
    def mul(self, x: Mapping, y: Mapping) -> Elt:
        n = self.n
        acc: dict = {}
        for (lam, a), ca in x.items():
            for (mu, b), cb in y.items():
                ab = mono_mul(n, a, b)
                if ab is None:
                    continue
                s = -1 if (a[1] * sum(mu)) % 2 else 1
                for (nu, e), v in self._prod(lam, mu).items():
                    m = mono_mul(n, e, ab)
                    if m is not None:
                        _add(acc, (nu, m), s * ca * cb * v)
        return acc

    def add(self, *xs: Mapping) -> Elt:
        acc: dict = {}
        for x in xs:
            for key, c in x.items():
                _add(acc, key, c)
        return acc

    def scale(self, x: Mapping, c: int) -> Elt:
        return {key: c * v for key, v in x.items()} if c else {}

    def left_a(self, a: AMono, x: Mapping, c: int = 1) -> Elt:
        """(1 ⊗ a) · x."""
        acc: dict = {}
        for (lam, b), v in x.items():
            m = mono_mul(self.n, a, b)
            if m is not None:
                s = -1 if (a[1] * sum(lam)) % 2 else 1
                _add(acc, (lam, m), s * c * v)
        return acc

    def right_a(self, x: Mapping, a: AMono, c: int = 1) -> Elt:
        """x · (1 ⊗ a)."""
        acc: dict = {}
        for (lam, b), v in x.items():
            m = mono_mul(self.n, b, a)
            if m is not None:
                _add(acc, (lam, m), c * v)
        return acc

    def from_an(self, a: AnScalar) -> Elt:
        return {((), m): c for m, c in a.terms.items()}

    def from_ol(self, f: SkewPoly) -> Elt:
        """Image of an odd symmetric polynomial in k variables."""
        if f.n != self.k:
            raise ValueError("polynomial has the wrong number of variables")
        acc: dict = {}
        for total, comp in f.components().items():
            if self.k == 0:
                for _e, c in comp.terms.items():
                    _add(acc, ((), self.one_a), c)
                continue
            for lam, c in ol_basis(self.k, total, "h").coords(comp).items():
                for key, v in self.reduce_word(tuple(lam)).items():
                    _add(acc, key, c * v)
        return acc

    def h(self, m: int) -> Elt:
        if m < 0:
            return {}
        return self.reduce_word((m,))

    def eps(self, r: int) -> Elt:
        if r < 0 or (self.k == 0 and r > 0):
            return {} if r else dict(self.unit)
        return self.from_ol(elementary(r, self.k))

    def h_prime(self, m: int) -> Elt:
        """``sum_r (-1)^r h_{m-r} ⊗ c_r`` reduced into the box basis."""
        acc: dict = {}
        for r in range(0, m + 1):
            cm = c_mono(r, self.n)
            if cm is None:
                continue
            part = self.right_a(self.h(m - r), cm, (-1) ** r)
            for key, v in part.items():
                _add(acc, key, v)
        return acc

    def h_prime_unreduced(self, m: int) -> dict[tuple[tuple[int, ...], AMono], int]:
        """``h'_m`` as a formal sum of ``h_j ⊗ c_r`` (no reduction)."""
        out = {}
        for r in range(0, m + 1):
            cm = c_mono(r, self.n)
            if cm is not None:
                out[(((m - r),) if m - r else (), cm)] = (-1) ** r
        return out

    def word_h_prime(self, word: Sequence[int]) -> Elt:
        out = dict(self.unit)
        for m in word:
            out = self.mul(out, self.h_prime(m))
        return out

    def degree_of(self, x: Mapping) -> int:
        degs = {self.key_degree(k) for k in x}
        if len(degs) != 1:
            raise ValueError("zero or inhomogeneous element")
        return degs.pop()

    def parity_of(self, x: Mapping) -> int:
        ps = {self.key_parity(k) for k in x}
        if len(ps) != 1:
            raise ValueError("zero or mixed element")
        return ps.pop()

    def mod2(self, x: Mapping) -> dict:
        return {k: 1 for k, v in x.items() if v % 2}


_cache: dict[tuple[int, int], Grassmannian] = {}
_cache_lock = threading.Lock()


def grassmannian(k: int, n: int) -> Grassmannian:
    g = _cache.get((k, n))
    if g is None:
        with _cache_lock:
            g = _cache.setdefault((k, n), Grassmannian(k, n))
    return g


class MknElement:
    """User-facing wrapper around a box-basis coordinate dictionary."""

    __slots__ = ("g", "terms")

    def __init__(self, g: Grassmannian, terms: Mapping | None = None):
        self.g = g
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def h_prime(cls, m: int, k: int, n: int) -> "MknElement":
        g = grassmannian(k, n)
        return cls(g, g.h_prime(m))

    def __mul__(self, other: "MknElement") -> "MknElement":
        return MknElement(self.g, self.g.mul(self.terms, other.terms))

    def __add__(self, other: "MknElement") -> "MknElement":
        return MknElement(self.g, self.g.add(self.terms, other.terms))

    def __sub__(self, other: "MknElement") -> "MknElement":
        return MknElement(self.g, self.g.add(self.terms, self.g.scale(other.terms, -1)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MknElement) and self.g is other.g and self.terms == other.terms

    def __repr__(self) -> str:
        return f"MknElement(k={self.g.k}, n={self.g.n}, {self.terms})"
