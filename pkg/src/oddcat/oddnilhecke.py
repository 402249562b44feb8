"""The odd nilHecke algebra in PBW form ``sum c * tau_w x^alpha``.

``tau_w`` always means the product along the canonical (lexicographically
smallest) reduced word of ``w``. Any other reduced word differs from it by
a sign recorded in a :class:`SignedWordTable`.
"""

from __future__ import annotations

import threading
from collections import deque
from math import comb
from typing import Iterable, Mapping, Sequence

from .grading import Degree
from .skewpoly import Exp, Permutation, SkewPoly, mono_mul_sign

Key = tuple[tuple[int, ...], Exp]


class SignedWordTable:
    """Signs of reduced words relative to the canonical word, per permutation.

    Built by breadth-first search over braid moves (sign +1) and distant
    commutations (sign -1). Revisiting a word with the other sign would mean
    the relations force ``2 tau_w = 0`` and raises immediately.
    """

    def __init__(self, n: int):
        self.n = n
        self._tables: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
        self._lock = threading.Lock()

    def table(self, w: Permutation) -> dict[tuple[int, ...], int]:
        key = w.oneline
        tab = self._tables.get(key)
        if tab is None:
            with self._lock:
                tab = self._tables.get(key)
                if tab is None:
                    tab = self._build(w.reduced_word())
                    self._tables[key] = tab
        return tab

    @staticmethod
    def _build(start: tuple[int, ...]) -> dict[tuple[int, ...], int]:
        seen = {start: 1}
        todo = deque([start])
        while todo:
            word = todo.popleft()
            sgn = seen[word]
            for nxt, s in _moves(word):
                v = sgn * s
                old = seen.get(nxt)
                if old is None:
                    seen[nxt] = v
                    todo.append(nxt)
                elif old != v:
                    raise ArithmeticError(f"inconsistent sign for reduced word {nxt}")
        return seen

    def sign(self, word: Sequence[int]) -> int:
        """Sign with ``tau_word = sign * tau_w``; 0 if the word is not reduced."""
        w = Permutation.from_word(word, self.n)
        if w.length() != len(word):
            return 0
        return self.table(w)[tuple(word)]

    def export(self) -> dict[tuple[int, ...], dict[tuple[int, ...], int]]:
        return {k: dict(v) for k, v in sorted(self._tables.items())}

    def load(self, data: Mapping[tuple[int, ...], Mapping[tuple[int, ...], int]]) -> None:
        with self._lock:
            for k, v in data.items():
                self._tables[tuple(k)] = {tuple(w): int(s) for w, s in v.items()}

    def fill(self) -> None:
        for w in Permutation.all(self.n):
            self.table(w)


def _moves(word: tuple[int, ...]):
    for p in range(len(word) - 1):
        a, b = word[p], word[p + 1]
        if abs(a - b) > 1:
            yield word[:p] + (b, a) + word[p + 2:], -1
        if p + 2 < len(word) and abs(a - b) == 1 and word[p + 2] == a:
            yield word[:p] + (b, a, b) + word[p + 3:], 1


_tables: dict[int, SignedWordTable] = {}
_tables_lock = threading.Lock()


def word_table(n: int) -> SignedWordTable:
    tab = _tables.get(n)
    if tab is None:
        with _tables_lock:
            tab = _tables.setdefault(n, SignedWordTable(n))
    return tab


_append_cache: dict[tuple[tuple[int, ...], int], tuple[int, tuple[int, ...] | None]] = {}


def append_letter(u: tuple[int, ...], i: int) -> tuple[int, tuple[int, ...] | None]:
    """``tau_u tau_i = sign * tau_{u s_i}`` (sign 0 when the length drops)."""
    key = (u, i)
    hit = _append_cache.get(key)
    if hit is not None:
        return hit
    if u[i - 1] > u[i]:
        res = (0, None)
    else:
        w = list(u)
        w[i - 1], w[i] = w[i], w[i - 1]
        wp = Permutation(w)
        word = Permutation(u).reduced_word() + (i,)
        res = (word_table(len(u)).table(wp)[word], wp.oneline)
    _append_cache[key] = res
    return res


class NilHeckeElement:
    """Element of the odd nilHecke algebra on ``n`` strands."""

    __slots__ = ("n", "_t")

    def __init__(self, n: int, terms: Mapping[Key, int] | None = None, *, _trusted: bool = False):
        self.n = n
        if _trusted:
            self._t = terms  # type: ignore[assignment]
        else:
            acc: dict[Key, int] = {}
            for (w, a), c in (terms or {}).items():
                w = tuple(w.oneline if isinstance(w, Permutation) else w)
                a = tuple(a)
                if len(w) != n or len(a) != n:
                    raise ValueError("term size mismatch")
                acc[(w, a)] = acc.get((w, a), 0) + int(c)
            self._t = {k: c for k, c in acc.items() if c}

    # constructors
    @classmethod
    def zero(cls, n: int) -> "NilHeckeElement":
        return cls(n, {}, _trusted=True)

    @classmethod
    def one(cls, n: int) -> "NilHeckeElement":
        return cls(n, {(tuple(range(1, n + 1)), (0,) * n): 1}, _trusted=True)

    @classmethod
    def tau(cls, i: int, n: int) -> "NilHeckeElement":
        return cls(n, {(Permutation.simple(i, n).oneline, (0,) * n): 1}, _trusted=True)

    @classmethod
    def tau_perm(cls, w: Permutation) -> "NilHeckeElement":
        return cls(w.n, {(w.oneline, (0,) * w.n): 1}, _trusted=True)

    @classmethod
    def x(cls, i: int, n: int) -> "NilHeckeElement":
        a = [0] * n
        a[i - 1] = 1
        return cls(n, {(tuple(range(1, n + 1)), tuple(a)): 1}, _trusted=True)

    @classmethod
    def poly(cls, f: SkewPoly) -> "NilHeckeElement":
        ident = tuple(range(1, f.n + 1))
        return cls(f.n, {(ident, a): c for a, c in f.terms.items()}, _trusted=True)

    @classmethod
    def tau_word(cls, word: Sequence[int], n: int) -> "NilHeckeElement":
        s = word_table(n).sign(word)
        if not s:
            return cls.zero(n)
        w = Permutation.from_word(word, n)
        return cls(n, {(w.oneline, (0,) * n): s}, _trusted=True)

    @property
    def terms(self) -> dict[Key, int]:
        return self._t

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = NilHeckeElement.one(self.n).scale(other)
        return isinstance(other, NilHeckeElement) and self.n == other.n and self._t == other._t

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._t.items())))

    def __add__(self, other: "NilHeckeElement") -> "NilHeckeElement":
        if isinstance(other, int):
            other = NilHeckeElement.one(self.n).scale(other)
        acc = dict(self._t)
        for k, c in other._t.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
        return NilHeckeElement(self.n, acc, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "NilHeckeElement":
        return self.scale(-1)

    def __sub__(self, other: "NilHeckeElement") -> "NilHeckeElement":
        if isinstance(other, int):
            other = NilHeckeElement.one(self.n).scale(other)
        return self + other.scale(-1)

    def __rsub__(self, other: int) -> "NilHeckeElement":
        return NilHeckeElement.one(self.n).scale(other) - self

    def scale(self, c: int) -> "NilHeckeElement":
        if not c:
            return NilHeckeElement.zero(self.n)
        return NilHeckeElement(self.n, {k: c * v for k, v in self._t.items()}, _trusted=True)

    def __mul__(self, other: "NilHeckeElement | int") -> "NilHeckeElement":
        if isinstance(other, int):
            return self.scale(other)
        if other.n != self.n:
            raise ValueError("strand count mismatch")
        n = self.n
        # left factor grouped as tau_u * f_u
        state: dict[tuple[int, ...], SkewPoly] = {}
        grouped: dict[tuple[int, ...], dict[Exp, int]] = {}
        for (u, a), c in self._t.items():
            grouped.setdefault(u, {})[a] = c
        for u, t in grouped.items():
            state[u] = SkewPoly(n, t, _trusted=True)
        by_v: dict[tuple[int, ...], dict[Exp, int]] = {}
        for (v, b), c in other._t.items():
            by_v.setdefault(v, {})[b] = c
        acc: dict[Key, int] = {}
        for v, betas in by_v.items():
            cur = state
            for i in Permutation(v).reduced_word():
                cur = _push_tau(cur, i, n)
                if not cur:
                    break
            for u, f in cur.items():
                for b, cb in betas.items():
                    for a, ca in f.terms.items():
                        e = tuple(p + q for p, q in zip(a, b))
                        val = ca * cb * mono_mul_sign(a, b)
                        k = (u, e)
                        acc[k] = acc.get(k, 0) + val
        return NilHeckeElement(n, {k: c for k, c in acc.items() if c}, _trusted=True)

    def __rmul__(self, other: int) -> "NilHeckeElement":
        return self.scale(other)

    def __pow__(self, k: int) -> "NilHeckeElement":
        out = NilHeckeElement.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def degree(self) -> Degree:
        degs = {Degree(-2 * Permutation(w).length() + 2 * sum(a), Permutation(w).length() + sum(a))
                for (w, a) in self._t}
        if len(degs) != 1:
            raise ValueError("zero or inhomogeneous element has no degree")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        try:
            self.degree()
            return True
        except ValueError:
            return not self._t

    def act(self, f: SkewPoly) -> SkewPoly:
        """Image of f under the polynomial representation."""
        out = SkewPoly.zero(self.n)
        for (w, a), c in self._t.items():
            g = (SkewPoly.monomial(a) * f).dd_word(Permutation(w).reduced_word())
            if g:
                out = out + g.scale(c)
        return out

    def mod2(self) -> dict[Key, int]:
        return {k: 1 for k, c in self._t.items() if c % 2}

    def __repr__(self) -> str:
        if not self._t:
            return "0"
        bits = []
        for (w, a), c in sorted(self._t.items()):
            word = Permutation(w).reduced_word()
            tw = "".join(f"t{i}" for i in word)
            xa = "".join(f"x{i + 1}" + (f"^{v}" if v > 1 else "") for i, v in enumerate(a) if v)
            bits.append(f"{c}*{tw or ''}{'*' if tw and xa else ''}{xa or ('' if tw else '1')}")
        return " + ".join(bits)


def _push_tau(state: dict[tuple[int, ...], SkewPoly], i: int, n: int) -> dict[tuple[int, ...], SkewPoly]:
    """Right multiply ``sum tau_u f_u`` by ``tau_i`` using f tau_i = tau_i s_i(f) - d_i(s_i f)."""
    out: dict[tuple[int, ...], SkewPoly] = {}
    si = Permutation.simple(i, n)
    for u, f in state.items():
        g = f.act(si)
        sgn, up = append_letter(u, i)
        if sgn:
            h = g.scale(sgn)
            out[up] = out[up] + h if up in out else h
        dg = g.dd(i)
        if dg:
            out[u] = out[u] - dg if u in out else -dg
    return {u: f for u, f in out.items() if f}


def normalize(letters: Iterable[tuple[str, int]], n: int, sign: int = 1) -> NilHeckeElement:
    """PBW normal form of a word in generators ``("x", i)`` and ``("t", i)``."""
    out = NilHeckeElement.one(n).scale(sign)
    for kind, i in letters:
        if kind == "x":
            out = out * NilHeckeElement.x(i, n)
        elif kind in ("t", "tau"):
            out = out * NilHeckeElement.tau(i, n)
        else:
            raise ValueError(f"unknown letter {kind!r}")
    return out


def x_product(n: int, pairs: Sequence[tuple[int, int]]) -> SkewPoly:
    """Ordered product ``x_{i_1}^{p_1} x_{i_2}^{p_2} ...`` given as (i, p) pairs."""
    out = SkewPoly.one(n)
    for i, p in pairs:
        out = out * SkewPoly.var(i, n) ** p
    return out


def w0_word(n: int) -> tuple[int, ...]:
    """Preferred word 1 (2 1) (3 2 1) ... (n-1 ... 1) for the longest element."""
    return tuple(j for top in range(1, n) for j in range(top, 0, -1))


def w0_word_reversed(n: int) -> tuple[int, ...]:
    """Alternative word (n-1) (n-2 n-1) ... (1 ... n-1)."""
    return tuple(j for low in range(n - 1, 0, -1) for j in range(low, n))


def interval_w0_word(l: int, m: int) -> tuple[int, ...]:
    """(t_l ... t_{m-1})(t_l ... t_{m-2}) ... t_l."""
    return tuple(j for top in range(m - 1, l - 1, -1) for j in range(l, top + 1))


def interval_w0_word_prime(l: int, m: int) -> tuple[int, ...]:
    """(t_{m-1} ... t_l)(t_{m-1} ... t_{l+1}) ... t_{m-1}."""
    return tuple(j for low in range(l, m) for j in range(m - 1, low - 1, -1))


def idempotent_e(n: int) -> NilHeckeElement:
    """``(-1)^C(n,3) x_1^{n-1} x_2^{n-2} ... x_n^0 tau_{w0}``."""
    xs = x_product(n, [(i, n - i) for i in range(1, n + 1)])
    return (NilHeckeElement.poly(xs) * NilHeckeElement.tau_word(w0_word(n), n)).scale((-1) ** comb(n, 3))


def idempotent_e_prime(n: int) -> NilHeckeElement:
    """``(-1)^C(n,3) tau_{w0} x_n^{n-1} x_{n-1}^{n-2} ... x_1^0``."""
    xs = x_product(n, [(i, i - 1) for i in range(n, 0, -1)])
    return (NilHeckeElement.tau_word(w0_word(n), n) * NilHeckeElement.poly(xs)).scale((-1) ** comb(n, 3))


class IntervalData:
    """The pieces of the interval idempotents on strands ``l..m`` inside ``k``."""

    def __init__(self, l: int, m: int, k: int):
        if not (1 <= l and m <= k) or l > m + 1:
            raise ValueError(f"invalid interval [{l},{m}] in {k} strands")
        self.l, self.m, self.k = l, m, k
        size = max(m - l + 1, 0)
        s_x = (-1) ** comb(size, 3)
        # the extra (-1)^C(size,2) sometimes attached here turns e' into -e'
        s_xp = (-1) ** comb(size, 3)
        # x_m^0 x_{m-1}^1 ... x_l^{m-l}
        self.x = x_product(k, [(j, m - j) for j in range(m, l - 1, -1)]).scale(s_x)
        # x_l^0 x_{l+1}^1 ... x_m^{m-l}
        self.x_prime = x_product(k, [(j, j - l) for j in range(l, m + 1)]).scale(s_xp)
        self.tau_w0 = NilHeckeElement.tau_word(interval_w0_word(l, m), k)
        self.tau_w0_prime_word = NilHeckeElement.tau_word(interval_w0_word_prime(l, m), k)

    @property
    def e(self) -> NilHeckeElement:
        return self.tau_w0 * NilHeckeElement.poly(self.x)

    @property
    def e_prime(self) -> NilHeckeElement:
        return NilHeckeElement.poly(self.x_prime) * self.tau_w0_prime_word


def interval_idempotents(l: int, m: int, k: int) -> IntervalData:
    return IntervalData(l, m, k)


def grdim_counts(n: int, bound: int) -> dict[tuple[int, int], int]:
    """Count PBW basis elements by (degree, parity) up to ``bound``."""
    from .skewpoly import monomials

    out: dict[tuple[int, int], int] = {}
    for w in Permutation.all(n):
        lw = w.length()
        t = 0
        while -2 * lw + 2 * t <= bound:
            cnt = sum(1 for _ in monomials(n, t))
            key = (-2 * lw + 2 * t, (lw + t) % 2)
            out[key] = out.get(key, 0) + cnt
            t += 1
    return out


# ---------------------------------------------------------------- relation checks

def relation_operators(n: int) -> list[tuple[str, tuple[int, ...], list[list[tuple[int, str, int]]]]]:
    """The defining relations as signed operator words.

    Each relation is ``(name, indices, terms)``; a term is a list of letters
    ``(sign, kind, i)`` applied right to left, and the relation asserts that
    the terms sum to the identity (for the two Leibniz rules) or to zero.
    """
    rels = []
    for i in range(1, n):
        rels.append(("tau_sq", (i,), [[(1, "t", i), (1, "t", i)]], 0))
        rels.append(("x_tau", (i,), [[(1, "x", i), (1, "t", i)], [(1, "t", i), (1, "x", i + 1)]], 1))
        rels.append(("tau_x", (i,), [[(1, "t", i), (1, "x", i)], [(1, "x", i + 1), (1, "t", i)]], 1))
    for i in range(1, n - 1):
        rels.append((
            "braid", (i,),
            [[(1, "t", i), (1, "t", i + 1), (1, "t", i)], [(-1, "t", i + 1), (1, "t", i), (1, "t", i + 1)]], 0,
        ))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rels.append(("x_anti", (i, j), [[(1, "x", i), (1, "x", j)], [(1, "x", j), (1, "x", i)]], 0))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(("tau_anti", (i, j), [[(1, "t", i), (1, "t", j)], [(1, "t", j), (1, "t", i)]], 0))
    for i in range(1, n + 1):
        for j in range(1, n):
            if i not in (j, j + 1):
                rels.append(("x_tau_anti", (i, j), [[(1, "x", i), (1, "t", j)], [(1, "t", j), (1, "x", i)]], 0))
    return rels


def _apply(term: Sequence[tuple[int, str, int]], f: SkewPoly) -> SkewPoly:
    sign = 1
    for s, kind, i in reversed(term):
        sign *= s
        f = f.dd(i) if kind == "t" else SkewPoly.var(i, f.n) * f
        if not f:
            return f
    return f.scale(sign)


def check_relations(n: int, bound: int) -> dict[tuple[str, tuple[int, ...]], bool]:
    """Every defining relation on every monomial of degree <= bound (deg x_i = 2)."""
    from .skewpoly import monomials

    rels = relation_operators(n)
    ok = {(name, idx): True for name, idx, _t, _c in rels}
    for total in range(bound // 2 + 1):
        for e in monomials(n, total):
            f = SkewPoly.monomial(e)
            for name, idx, terms, const in rels:
                if not ok[(name, idx)]:
                    continue
                acc = SkewPoly.zero(n)
                for t in terms:
                    acc = acc + _apply(t, f)
                if acc != (f if const else SkewPoly.zero(n)):
                    ok[(name, idx)] = False
    return ok


def pbw_independent(n: int, degree: int) -> bool:
    """PBW elements of one degree act independently on OPol_n (faithful action)."""
    from itertools import product

    from .linalg import rank
    from .skewpoly import monomials

    elts = []
    for w in Permutation.all(n):
        t2 = degree + 2 * w.length()
        if t2 >= 0 and t2 % 2 == 0:
            elts += [NilHeckeElement(n, {(w.oneline, a): 1}, _trusted=True) for a in monomials(n, t2 // 2)]
    if not elts:
        return True
    # the action commutes with right multiplication by OL_n, and the staircase
    # monomials generate OPol_n as a right OL_n-module
    probes = [tuple(a) for a in product(*[range(n - i) for i in range(n)])]
    vecs = []
    for x in elts:
        v = {}
        for j, p in enumerate(probes):
            for a, c in x.act(SkewPoly.monomial(p)).terms.items():
                v[(j, a)] = c
        vecs.append(v)
    return rank(vecs) == len(vecs)
