"""Classical (even) models over GF(2) used as independent oracles.

Nothing here imports the odd arithmetic except to read coefficients off odd
objects in ``reduce_mod2``. Polynomials over GF(2) are stored by their
support; the even Grassmannian algebra is a quotient of a commutative
polynomial ring presented by a sympy Groebner basis.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Mapping, Sequence

import sympy as sp

from ._kernels import rank_mod_p

Exp = tuple[int, ...]


# ---------------------------------------------------------------- Mod2Poly

class Mod2Poly:
    """Polynomial over GF(2) in commuting x_1..x_n, stored as its support."""

    __slots__ = ("n", "support")

    def __init__(self, n: int, support: Iterable[Exp] = ()):
        self.n = n
        acc: set = set()
        for e in support:
            acc ^= {tuple(e)}
        self.support = frozenset(acc)

    @classmethod
    def from_terms(cls, terms: Mapping[Exp, int], n: int) -> "Mod2Poly":
        return cls(n, [e for e, c in terms.items() if c % 2])

    @classmethod
    def monomial(cls, e: Exp) -> "Mod2Poly":
        return cls(len(e), [tuple(e)])

    def __bool__(self) -> bool:
        return bool(self.support)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Mod2Poly) and self.n == other.n and self.support == other.support

    def __hash__(self) -> int:
        return hash((self.n, self.support))

    def __add__(self, other: "Mod2Poly") -> "Mod2Poly":
        return Mod2Poly(self.n, self.support ^ other.support)

    def __mul__(self, other: "Mod2Poly") -> "Mod2Poly":
        acc: set = set()
        for a in self.support:
            for b in other.support:
                acc ^= {tuple(x + y for x, y in zip(a, b))}
        return Mod2Poly(self.n, acc)

    def swap(self, i: int) -> "Mod2Poly":
        """The transposition x_i <-> x_{i+1}."""
        out = []
        for e in self.support:
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out.append(tuple(e))
        return Mod2Poly(self.n, out)

    def dd(self, i: int) -> "Mod2Poly":
        """Classical divided difference (f - s_i f) / (x_i - x_{i+1})."""
        out = []
        for e in self.support:
            a, b = e[i - 1], e[i]
            lo, hi = min(a, b), max(a, b)
            for j in range(hi - lo):
                f = list(e)
                f[i - 1], f[i] = hi - 1 - j, lo + j
                out.append(tuple(f))
        return Mod2Poly(self.n, out)

    def dd_word(self, word: Sequence[int]) -> "Mod2Poly":
        """Rightmost letter applied first."""
        f = self
        for i in reversed(word):
            f = f.dd(i)
            if not f:
                break
        return f

    def __repr__(self) -> str:
        return " + ".join(sorted(map(str, self.support))) or "0"


def elementary2(k: int, n: int) -> Mod2Poly:
    return Mod2Poly(n, [tuple(1 if j in idx else 0 for j in range(n)) for idx in combinations(range(n), k)])


@lru_cache(maxsize=None)
def schur2(lam: tuple[int, ...], n: int) -> Mod2Poly:
    """Bialternant a_{λ+δ} / a_δ computed over Z, then reduced."""
    if len(lam) > n:
        return Mod2Poly(n)
    lam = tuple(lam) + (0,) * (n - len(lam))
    x = sp.symbols(f"x1:{n + 1}")

    def alternant(exps: Sequence[int]) -> sp.Poly:
        acc: dict = {}
        for perm in permutations(range(n)):
            inv = sum(1 for a, b in combinations(perm, 2) if a > b)
            e = [0] * n
            for j, p in enumerate(perm):
                e[p] = exps[j]
            acc[tuple(e)] = acc.get(tuple(e), 0) + (-1) ** inv
        return sp.Poly.from_dict(acc, *x, domain="ZZ")

    delta = [n - 1 - j for j in range(n)]
    s = alternant([lam[j] + delta[j] for j in range(n)]).exquo(alternant(delta))
    return Mod2Poly.from_terms({e: int(c) for e, c in s.as_dict().items()}, n)


# ---------------------------------------------------------------- even nilHecke

class EvenNilHecke:
    """Element of NH_n over GF(2): a set of (ω, a) meaning ∂_ω x^a."""

    def __init__(self, n: int, terms: Iterable[tuple[tuple[int, ...], Exp]]):
        self.n = n
        acc: set = set()
        for t in terms:
            acc ^= {t}
        self.terms = frozenset(acc)

    def act(self, f: Mod2Poly) -> Mod2Poly:
        out = Mod2Poly(self.n)
        for w, a in self.terms:
            out = out + (Mod2Poly.monomial(a) * f).dd_word(reduced_word(w))
        return out


def reduced_word(w: Sequence[int]) -> tuple[int, ...]:
    """Reduced word s_{i_1}...s_{i_r} of the one-line permutation w."""
    w = list(w)
    word: list[int] = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                break
        else:
            # sorting applied w s_{j_1} ... s_{j_r} = 1
            return tuple(reversed(word))


def staircase_monomials(n: int) -> list[Exp]:
    """x^a with a_i <= n - i; they generate Pol_n over the symmetric polynomials."""
    return [tuple(a) for a in product(*[range(n - i) for i in range(n)])]


def same_operator(x: EvenNilHecke, y: EvenNilHecke) -> bool:
    """Operators agree; testing on staircase monomials suffices by symmetric linearity."""
    return all(x.act(Mod2Poly.monomial(a)) == y.act(Mod2Poly.monomial(a)) for a in staircase_monomials(x.n))


# ---------------------------------------------------------------- reduction

def reduce_mod2(obj):
    """Image of an odd object in its even model: fixes every x_i and τ_i -> ∂_i."""
    from .deform.grassmannian import MknElement
    from .oddnilhecke import NilHeckeElement
    from .skewpoly import SkewPoly

    if isinstance(obj, SkewPoly):
        return Mod2Poly.from_terms(obj.terms, obj.n)
    if isinstance(obj, NilHeckeElement):
        return EvenNilHecke(obj.n, [k for k, c in obj.terms.items() if c % 2])
    if isinstance(obj, MknElement):
        return even_grassmannian(obj.g.k, obj.g.n).from_box(obj.terms)
    raise TypeError(f"no even model for {type(obj).__name__}")


# ---------------------------------------------------------------- LR by tableaux

def _contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def lr_tableaux(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Number of LR tableaux of shape λ/μ and content ν."""
    lam, mu, nu = list(lam), list(mu), [p for p in nu if p]
    if sum(lam) != sum(mu) + sum(nu) or not _contains(lam, mu):
        return 0
    mu = mu + [0] * (len(lam) - len(mu))
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r] - 1, mu[r] - 1, -1)]
    fill: dict[tuple[int, int], int] = {}
    count = [0] * (len(nu) + 1)

    def rec(i: int) -> int:
        if i == len(cells):
            return 1
        r, c = cells[i]
        total = 0
        for v in range(1, len(nu) + 1):
            right = fill.get((r, c + 1))
            if right is not None and v > right:
                break
            above = fill.get((r - 1, c))
            if above is not None and v <= above:
                continue
            if count[v] >= nu[v - 1] or (v > 1 and count[v] >= count[v - 1]):
                continue
            fill[(r, c)] = v
            count[v] += 1
            total += rec(i + 1)
            count[v] -= 1
            del fill[(r, c)]
        return total

    return rec(0)


def _partitions(total: int, max_len: int) -> list[tuple[int, ...]]:
    out = []

    def rec(rem: int, cap: int, acc: list[int]) -> None:
        if rem == 0:
            out.append(tuple(acc))
            return
        if len(acc) == max_len:
            return
        for p in range(min(rem, cap), 0, -1):
            rec(rem - p, p, acc + [p])

    rec(total, total, [])
    return out


def even_lr(mu: Sequence[int], nu: Sequence[int], max_len: int | None = None) -> dict[tuple[int, ...], int]:
    """Classical LR numbers c^λ_{μν}, optionally restricted to ℓ(λ) <= max_len."""
    mu = tuple(p for p in mu if p)
    nu = tuple(p for p in nu if p)
    size = sum(mu) + sum(nu)
    cap = max_len if max_len is not None else size
    out = {}
    for lam in _partitions(size, cap):
        c = lr_tableaux(lam, mu, nu)
        if c:
            out[lam] = c
    return out


# ---------------------------------------------------------------- even Grassmannian

class EvenGrassmannian:
    """H*_{GL(n)}(Gr(k;n)) ⊗ GF(2) with the deformation ring A_n ⊗ GF(2).

    Generators: e_i (first block, i <= k), f_j (last block, j <= n-k),
    chi_1..chi_{n//2} and d; relations ``sum_{i+j=m} e_i f_j = c_m`` with
    c_1 = d, c_{2j} = chi_j, c_{2j+1} = chi_j d, plus d^2 = 0 and
    d chi_{n/2} = 0 for even n.
    """

    def __init__(self, k: int, n: int):
        self.k, self.n = k, n
        self.e = sp.symbols(f"e1:{k + 1}") if k else ()
        self.f = sp.symbols(f"f1:{n - k + 1}") if n - k else ()
        self.chi = sp.symbols(f"chi1:{n // 2 + 1}") if n // 2 else ()
        self.d = sp.Symbol("d")
        self.gens = (*self.f, *self.e, *self.chi, self.d)
        rels = [self.d**2]
        if n % 2 == 0 and n >= 2:
            rels.append(self.d * self.chi[-1])
        for m in range(1, n + 1):
            lhs = sum(self._e(i) * self._f(m - i) for i in range(0, m + 1))
            rels.append(sp.expand(lhs - self.c(m)))
        self.ideal = sp.groebner(rels, *self.gens, modulus=2, order="grevlex")
        self.weights = {**{v: 2 * (i + 1) for i, v in enumerate(self.e)},
                        **{v: 2 * (j + 1) for j, v in enumerate(self.f)},
                        **{v: 4 * (j + 1) for j, v in enumerate(self.chi)}, self.d: 2}

    def _e(self, i: int):
        return 1 if i == 0 else (self.e[i - 1] if i <= self.k else 0)

    def _f(self, j: int):
        return 1 if j == 0 else (self.f[j - 1] if j <= self.n - self.k else 0)

    def c(self, i: int):
        if i == 0:
            return 1
        if i % 2 == 0:
            return self.chi[i // 2 - 1]
        return self.d * (self.chi[i // 2 - 1] if i > 1 else 1)

    @staticmethod
    def complete_from(elem: Sequence, j: int):
        """h_j from elementary generators: h_j = sum_{i>=1} e_i h_{j-i} mod 2."""
        h = [sp.Integer(1)]
        for m in range(1, j + 1):
            h.append(sp.expand(sum(elem[i - 1] * h[m - i] for i in range(1, min(m, len(elem)) + 1))))
        return h[j]

    def h_first(self, j: int):
        return self.complete_from(self.e, j)

    def h_last(self, j: int):
        return self.complete_from(self.f, j)

    def a_monomial(self, a) -> sp.Expr:
        beta, e = a
        out = self.d**e
        for j, b in enumerate(beta):
            out *= self.chi[j] ** b
        return out

    def nf(self, expr) -> sp.Poly:
        expr = sp.expand(expr)
        if expr == 0:
            return sp.Poly(0, *self.gens, modulus=2)
        _q, r = self.ideal.reduce(expr)
        return sp.Poly(r, *self.gens, modulus=2)

    def from_box(self, terms: Mapping) -> sp.Poly:
        """β_k mod 2 on a box-basis element ``{(λ, a): coeff}``."""
        acc = 0
        for (lam, a), c in terms.items():
            if c % 2:
                t = self.a_monomial(a)
                for j in lam:
                    t *= self.h_first(j)
                acc += t
        return self.nf(acc)

    def omega0(self, terms: Mapping) -> sp.Expr:
        """Swap of blocks: h_λ of the first k variables -> h_λ of the last k."""
        acc = 0
        for (lam, a), c in terms.items():
            if c % 2:
                t = self.a_monomial(a)
                for j in lam:
                    t *= self.h_last(j)
                acc += t
        return acc

    def standard_count(self, degree: int) -> int:
        """Dimension in one degree: monomials outside the leading-term ideal."""
        leads = [sp.Poly(g, *self.gens).monoms(order="grevlex")[0] for g in self.ideal.exprs]
        w = [self.weights[v] for v in self.gens]
        count = 0
        for mono in _weighted_monomials(w, degree):
            if not any(all(m >= l for m, l in zip(mono, lead)) for lead in leads):
                count += 1
        return count


def _weighted_monomials(weights: Sequence[int], degree: int) -> Iterable[tuple[int, ...]]:
    def rec(i: int, rem: int, acc: list[int]):
        if i == len(weights):
            if rem == 0:
                yield tuple(acc)
            return
        for p in range(rem // weights[i] + 1):
            yield from rec(i + 1, rem - p * weights[i], acc + [p])

    yield from rec(0, degree, [])


@lru_cache(maxsize=None)
def even_grassmannian(k: int, n: int) -> EvenGrassmannian:
    return EvenGrassmannian(k, n)


def box_images_independent(k: int, n: int, degree: int) -> tuple[bool, int, int]:
    """β_k mod 2 carries the box basis of one degree onto a GF(2)-basis."""
    from .deform.grassmannian import grassmannian

    g = grassmannian(k, n)
    eg = even_grassmannian(k, n)
    keys = g.basis(degree)
    vecs = [dict.fromkeys(support_of(eg.from_box({key: 1})), 1) for key in keys]
    r = rank_mod_p(vecs) if vecs else 0
    dim = eg.standard_count(degree)
    return r == len(keys) == dim, len(keys), dim


def support_of(f: sp.Poly) -> list:
    return [m for m, c in f.terms() if c % 2]


# ---------------------------------------------------------------- certificates

def independence_certificate(vectors: Sequence[Mapping]) -> bool | None:
    """True when the mod-2 images are independent (hence so are the vectors over Z).

    Returns None when the certificate does not apply; callers fall back to an
    integer rank.
    """
    if not vectors:
        return True
    return True if rank_mod_p(vectors, 2) == len(vectors) else None


# ---------------------------------------------------------------- random samples

def random_skewpoly(rng: random.Random, n: int, max_total: int = 4, terms: int = 4):
    from .skewpoly import SkewPoly, monomials

    pool = [e for t in range(max_total + 1) for e in monomials(n, t)]
    data: dict = {}
    for _ in range(terms):
        e = rng.choice(pool)
        data[e] = data.get(e, 0) + rng.randint(-3, 3)
    return SkewPoly(n, {e: c for e, c in data.items() if c})


def random_nilhecke(rng: random.Random, n: int, max_total: int = 3, terms: int = 3):
    from .oddnilhecke import NilHeckeElement
    from .skewpoly import Permutation, monomials

    perms = [w.oneline for w in Permutation.all(n)]
    pool = [e for t in range(max_total + 1) for e in monomials(n, t)]
    data: dict = {}
    for _ in range(terms):
        key = (rng.choice(perms), rng.choice(pool))
        data[key] = data.get(key, 0) + rng.randint(-3, 3)
    return NilHeckeElement(n, {k: c for k, c in data.items() if c})


# ---------------------------------------------------------------- the bridge

def bridge_generators(n: int) -> dict[str, bool]:
    """The reduction fixes x_i, sends ∂_i and τ_i to classical ∂_i, ε_k to e_k and s_λ to s_λ."""
    from .oddnilhecke import NilHeckeElement
    from .oddsym import elementary, partitions, schur
    from .skewpoly import SkewPoly, monomials

    out = {}
    out["x_i"] = all(reduce_mod2(SkewPoly.var(i, n)) == Mod2Poly.monomial(_unit(i, n)) for i in range(1, n + 1))
    mons = [e for t in range(5) for e in monomials(n, t)]
    out["dd_i"] = all(
        reduce_mod2(SkewPoly.monomial(e).dd(i)) == Mod2Poly.monomial(e).dd(i) for i in range(1, n) for e in mons
    )
    out["tau_i"] = all(
        reduce_mod2(NilHeckeElement.tau(i, n)).act(Mod2Poly.monomial(e)) == Mod2Poly.monomial(e).dd(i)
        for i in range(1, n)
        for e in mons
    )
    out["eps_k"] = all(reduce_mod2(elementary(k, n)) == elementary2(k, n) for k in range(n + 1))
    out["schur"] = all(
        reduce_mod2(schur(tuple(lam), n)) == schur2(tuple(lam), n)
        for t in range(7)
        for lam in partitions(t, n)
    )
    return out


def _unit(i: int, n: int) -> Exp:
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def bridge_random(n: int, samples: int = 100, seed: int = 0) -> dict[str, bool]:
    """Ring-map and action compatibility on seeded random elements."""
    rng = random.Random(seed * 1000 + n)
    from .oddsym import eps_product

    ok = {"poly_mul": True, "poly_dd": True, "ol_symmetric": True, "nh_mul": True, "nh_act": True}
    for _ in range(samples):
        parts = [rng.randint(1, n) for _ in range(rng.randint(1, 3))]
        s = reduce_mod2(eps_product(parts, n))
        if any(s.swap(i) != s for i in range(1, n)):
            ok["ol_symmetric"] = False
        f, g = random_skewpoly(rng, n), random_skewpoly(rng, n)
        if reduce_mod2(f * g) != reduce_mod2(f) * reduce_mod2(g):
            ok["poly_mul"] = False
        for i in range(1, n):
            if reduce_mod2(f.dd(i)) != reduce_mod2(f).dd(i):
                ok["poly_dd"] = False
        x, y = random_nilhecke(rng, n), random_nilhecke(rng, n)
        rx, ry, rxy = reduce_mod2(x), reduce_mod2(y), reduce_mod2(x * y)
        if not all(rxy.act(Mod2Poly.monomial(a)) == rx.act(ry.act(Mod2Poly.monomial(a))) for a in staircase_monomials(n)):
            ok["nh_mul"] = False
        if reduce_mod2(x.act(f)) != rx.act(reduce_mod2(f)):
            ok["nh_act"] = False
    return ok
