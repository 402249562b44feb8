"""Exact operator model of the deformed cyclotomic quotient ONH_m^n.

ONH_m^n acts faithfully on V = OPol_m ⊗_{OL_m} M_m^n, a free right
M_m^n-module with basis x^γ (γ_i <= m - i). A vector is stored as
``{(β, λ, a): c}`` meaning ``sum c * x^β ⊗ (h_λ ⊗ a)``. The action is right
M-linear, so an element is determined by its images of the basis vectors
``x^γ ⊗ 1``; the flattened image ``{(γ, β, λ, a): c}`` is used as a
canonical coordinate vector for elements of ONH_m^n.

Elements are given as words: lists of factors multiplied left to right and
applied right to left. Factors are

* ``("poly", SkewPoly)``      left multiplication by a polynomial,
* ``("tau", i)``              the odd divided difference,
* ``("perm", Permutation)``   tau along the canonical reduced word,
* ``("word", (i_1, ...))``    tau_{i_1} ... tau_{i_r} (literal word),
* ``("a", AMono, c)``         the scalar c * a in A_n,
* ``("nh", NilHeckeElement)`` a PBW element of ONH_m.

OL_m acts on M_m^n through the involution κ with κ(ε_j) = (-1)^C(j,2) ε_j,
realised as the signed action of w0 followed by a parity twist. With the
untwisted map a^n(x_1) does not act by zero once m >= 2.
"""

from __future__ import annotations

import threading
from typing import Iterable, Mapping, Sequence

from ..oddnilhecke import NilHeckeElement
from ..oddsym import elementary, h_product, ol_basis, right_coordinates
from ..skewpoly import Exp, Permutation, SkewPoly, dd_mono, mono_mul_sign
from .an import AMono, a_poly, mono_degree, mono_mul, one_mono
from .grassmannian import grassmannian

Vec = dict  # {(β, λ, a): int}
Flat = dict  # {(γ, β, λ, a): int}


def _add(acc: dict, key, c: int) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def kappa_twist(m: int) -> int:
    """Parity twist making κ(ε_1) = ε_1 after the signed w0 action."""
    if m == 0:
        return 0
    e1 = elementary(1, m)
    return 0 if e1.act(Permutation.longest(m)) == e1 else 1


def kappa_poly(f: SkewPoly) -> SkewPoly:
    """κ on a homogeneous-by-component polynomial in OL_m (m = f.n)."""
    m = f.n
    if m == 0:
        return f
    g = f.act(Permutation.longest(m))
    if not kappa_twist(m):
        return g
    return SkewPoly(m, {e: (-c if sum(e) % 2 else c) for e, c in g.terms.items()})


class CyclotomicModel:
    """The module OPol_m ⊗_{OL_m} M_m^n with the action of ONH_m^n."""

    def __init__(self, m: int, n: int):
        if not 0 <= m <= n:
            raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
        self.m, self.n = m, n
        self.g = grassmannian(m, n)
        self.rc = right_coordinates(m, "monomial") if m else None
        self.gammas: list[Exp] = list(self.rc.keys) if m else [()]
        self.one_a = one_mono(n)
        self._lift_cache: dict[tuple[Exp, Exp, tuple], dict] = {}
        self._dd_cache: dict[tuple[int, Exp, tuple], dict] = {}
        self._kappa_cache: dict[tuple, dict] = {}
        self._lock = threading.Lock()
        if m:
            self._w0 = Permutation.longest(m)
            self._twist = kappa_twist(m)

    # ---------------------------------------------------------------- basics
    def basis_vector(self, gamma: Exp) -> Vec:
        return {(tuple(gamma), (), self.one_a): 1}

    def key_degree(self, key) -> int:
        beta, lam, a = key
        return 2 * sum(beta) + 2 * sum(lam) + mono_degree(a)

    def flat_degree(self, key) -> int:
        gamma, beta, lam, a = key
        return 2 * sum(beta) + 2 * sum(lam) + mono_degree(a) - 2 * sum(gamma)

    def flat_parity(self, key) -> int:
        gamma, beta, lam, a = key
        return (sum(beta) + sum(lam) + a[1] + sum(gamma)) % 2

    # ---------------------------------------------------------------- primitive moves
    def _lift(self, e: Exp, beta: Exp, lam: tuple) -> dict:
        """``x^e · (x^β ⊗ h_λ)`` as ``{(β', λ', a'): c}``."""
        key = (e, beta, lam)
        hit = self._lift_cache.get(key)
        if hit is not None:
            return hit
        s = mono_mul_sign(e, beta)
        prod = SkewPoly.monomial(tuple(x + y for x, y in zip(e, beta)), s)
        out = self._recoordinate(prod, lam)
        self._lift_cache[key] = out
        return out

    def kappa(self, mu: tuple) -> dict:
        """κ(h_μ) in M_m^n."""
        hit = self._kappa_cache.get(mu)
        if hit is not None:
            return hit
        if not mu:
            out = self.g.reduce_word(())
        else:
            f = h_product(mu, self.m).act(self._w0)
            s = -1 if (self._twist * sum(mu)) % 2 else 1
            out = {}
            for nu, c in ol_basis(self.m, sum(mu), "h").coords(f).items():
                for key, v in self.g.reduce_word(tuple(nu)).items():
                    _add(out, key, s * c * v)
        self._kappa_cache[mu] = out
        return out

    def _recoordinate(self, f: SkewPoly, lam: tuple) -> dict:
        """``f ⊗ h_λ`` with f in OPol_m, rewritten on the basis x^γ."""
        g = self.g
        out: dict = {}
        hl = {(lam, self.one_a): 1}
        for gamma, coeffs in self.rc.coords(f).items():
            cm: dict = {}
            for mu, c in coeffs.items():
                for key, v in self.kappa(tuple(mu)).items():
                    _add(cm, key, c * v)
            for (nu, a), v in g.mul(cm, hl).items():
                _add(out, (tuple(gamma), nu, a), v)
        return out

    def _dd(self, i: int, beta: Exp, lam: tuple) -> dict:
        key = (i, beta, lam)
        hit = self._dd_cache.get(key)
        if hit is not None:
            return hit
        terms = dict(dd_mono(i, beta))
        out = self._recoordinate(SkewPoly(self.m, terms), lam) if terms else {}
        self._dd_cache[key] = out
        return out

    # ---------------------------------------------------------------- actions on vectors
    def act_monomial(self, e: Exp, vec: Mapping, c: int = 1) -> Vec:
        n = self.n
        acc: dict = {}
        for (beta, lam, a), v in vec.items():
            for (b2, l2, a2), w in self._lift(tuple(e), beta, lam).items():
                aa = mono_mul(n, a2, a)
                if aa is not None:
                    _add(acc, (b2, l2, aa), c * v * w)
        return acc

    def act_poly(self, f: SkewPoly, vec: Mapping) -> Vec:
        acc: dict = {}
        for e, c in f.terms.items():
            for key, v in self.act_monomial(e, vec, c).items():
                _add(acc, key, v)
        return acc

    def act_tau(self, i: int, vec: Mapping) -> Vec:
        n = self.n
        acc: dict = {}
        for (beta, lam, a), v in vec.items():
            for (b2, l2, a2), w in self._dd(i, beta, lam).items():
                aa = mono_mul(n, a2, a)
                if aa is not None:
                    _add(acc, (b2, l2, aa), v * w)
        return acc

    def act_word(self, word: Sequence[int], vec: Mapping) -> Vec:
        out = dict(vec)
        for i in reversed(word):
            out = self.act_tau(i, out)
            if not out:
                break
        return out

    def act_a(self, a: AMono, vec: Mapping, c: int = 1) -> Vec:
        n = self.n
        acc: dict = {}
        for (beta, lam, b), v in vec.items():
            ab = mono_mul(n, a, b)
            if ab is None:
                continue
            s = -1 if (a[1] * (sum(beta) + sum(lam))) % 2 else 1
            _add(acc, (beta, lam, ab), s * c * v)
        return acc

    def act_nh(self, x: NilHeckeElement, vec: Mapping) -> Vec:
        acc: dict = {}
        for (w, alpha), c in x.terms.items():
            part = self.act_monomial(alpha, vec, c)
            part = self.act_word(Permutation(w).reduced_word(), part)
            for key, v in part.items():
                _add(acc, key, v)
        return acc

    def act(self, word: Iterable, vec: Mapping) -> Vec:
        out = dict(vec)
        for factor in reversed(list(word)):
            kind = factor[0]
            if kind == "poly":
                out = self.act_poly(factor[1], out)
            elif kind == "tau":
                out = self.act_tau(factor[1], out)
            elif kind == "perm":
                out = self.act_word(factor[1].reduced_word(), out)
            elif kind == "word":
                out = self.act_word(factor[1], out)
            elif kind == "a":
                out = self.act_a(factor[1], out, factor[2] if len(factor) > 2 else 1)
            elif kind == "nh":
                out = self.act_nh(factor[1], out)
            else:
                raise ValueError(f"unknown factor {kind!r}")
            if not out:
                break
        return out

    # ---------------------------------------------------------------- flattened elements
    def flatten(self, word: Iterable) -> Flat:
        word = list(word)
        out: dict = {}
        for gamma in self.gammas:
            for (beta, lam, a), v in self.act(word, self.basis_vector(gamma)).items():
                out[(gamma, beta, lam, a)] = v
        return out

    def right_a(self, flat: Mapping, c: AMono, coeff: int = 1) -> Flat:
        """Flattened ``P · c`` for a scalar c in A_n."""
        n = self.n
        acc: dict = {}
        for (gamma, beta, lam, a), v in flat.items():
            ac = mono_mul(n, a, c)
            if ac is None:
                continue
            s = -1 if (c[1] * sum(gamma)) % 2 else 1
            _add(acc, (gamma, beta, lam, ac), s * coeff * v)
        return acc

    def a_of_x1(self) -> list[tuple]:
        """Word factors for ``a^n(x_1) = sum_l t^l c_{n-l}`` (coefficients left)."""
        out = []
        for l, coeff in a_poly(self.n).coeffs.items():
            for mono, c in coeff.terms.items():
                e = (l,) + (0,) * (self.m - 1)
                out.append([("a", mono, c), ("poly", SkewPoly.monomial(e))])
        return out

    def a_of_x1_vanishes(self) -> bool:
        if self.m == 0:
            return True
        acc: dict = {}
        for word in self.a_of_x1():
            for key, v in self.flatten(word).items():
                _add(acc, key, v)
        return not acc


_models: dict[tuple[int, int], CyclotomicModel] = {}
_models_lock = threading.Lock()


def cyclotomic_model(m: int, n: int) -> CyclotomicModel:
    model = _models.get((m, n))
    if model is None:
        with _models_lock:
            model = _models.setdefault((m, n), CyclotomicModel(m, n))
    return model


def add_flat(*xs: Mapping) -> Flat:
    acc: dict = {}
    for x in xs:
        for key, v in x.items():
            _add(acc, key, v)
    return acc
