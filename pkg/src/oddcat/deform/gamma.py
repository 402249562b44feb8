"""The isomorphism γ: M_k^n -> M_{n-k}^n and the h'-presentation of M_k^n.

γ is defined on generators by ``h'_r -> (-1)^{(k+1)r + C(r,2)} ε_r ⊗ 1`` and
extended multiplicatively over the h'-basis ``h'_λ = h'_{λ_1} ... h'_{λ_k}``
(λ in the k x (n-k) box), which is A_n-linear on the right.
"""

from __future__ import annotations

from math import comb
from typing import Callable, Mapping

from ..linalg import SparseEchelon, smith_invariants
from .an import monomials_of_degree
from .grassmannian import Grassmannian, grassmannian


def _add(acc: dict, key, c: int) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def h_prime_relations(gen: Callable[[int], dict], g: Grassmannian, n: int) -> list[tuple[str, int, int, bool]]:
    """Evaluate the three h'-relation families on ``gen(r)`` inside ``g``.

    The third family is read with h'_{2m} on both sides.
    """
    mul, add = g.mul, g.add
    out = []
    for m in range(0, n + 1):
        for i in range(1, 2 * m):
            if 1 <= 2 * m - i <= n and i <= n:
                ok = mul(gen(i), gen(2 * m - i)) == mul(gen(2 * m - i), gen(i))
                out.append(("even", i, m, ok))
        for i in range(1, 2 * m + 1):
            if 1 <= 2 * m - i <= n - 1 and i <= n - 1:
                s = (-1) ** i
                lhs = add(mul(gen(i), gen(2 * m + 1 - i)), g.scale(mul(gen(2 * m + 1 - i), gen(i)), s))
                rhs = add(g.scale(mul(gen(i + 1), gen(2 * m - i)), s), mul(gen(2 * m - i), gen(i + 1)))
                out.append(("odd", i, m, lhs == rhs))
        if 1 < 2 * m <= n - 1:
            ok = add(mul(gen(1), gen(2 * m)), mul(gen(2 * m), gen(1))) == g.scale(gen(2 * m + 1), 2)
            out.append(("edge", 1, m, ok))
    return out


class GammaMap:
    def __init__(self, k: int, n: int):
        self.k, self.n = k, n
        self.src = grassmannian(k, n)
        self.tgt = grassmannian(n - k, n)
        self._hp: dict[tuple, dict] = {}

    def sign(self, r: int) -> int:
        return (-1) ** ((self.k + 1) * r + comb(r, 2))

    def image_generator(self, r: int) -> dict:
        if r == 0:
            return dict(self.tgt.unit)
        return self.tgt.scale(self.tgt.eps(r), self.sign(r))

    def h_prime_word(self, lam: tuple) -> dict:
        """h'_λ in the source, on its box basis."""
        hit = self._hp.get(lam)
        if hit is None:
            hit = self.src.word_h_prime(lam)
            self._hp[lam] = hit
        return hit

    def image_word(self, lam: tuple) -> dict:
        out = dict(self.tgt.unit)
        for r in lam:
            out = self.tgt.mul(out, self.image_generator(r))
        return out

    def h_prime_basis(self, degree: int) -> list[tuple]:
        """Keys (λ, a) of the h'-basis in one degree."""
        out = []
        for lam in self.src.box:
            for a in monomials_of_degree(self.n, degree - 2 * sum(lam)):
                out.append((lam, a))
        return out

    def unipotent(self, degree: int) -> bool:
        """The h'-basis differs from the h-basis by a unimodular change of coordinates."""
        keys = self.h_prime_basis(degree)
        basis = self.src.basis(degree)
        pos = {x: i for i, x in enumerate(basis)}
        rows = []
        for lam, a in keys:
            v = self.src.right_a(self.h_prime_word(lam), a)
            rows.append({pos[x]: c for x, c in v.items()})
        inv = smith_invariants(rows)
        return len(rows) == len(basis) and len(inv) == len(basis) and all(d == 1 for d in inv)

    def apply(self, elt: Mapping) -> dict:
        """γ of an element given on the box h-basis of the source."""
        # rewrite on the h'-basis first
        acc: dict = {}
        degs = {self.src.key_degree(x) for x in elt}
        for deg in degs:
            part = {x: c for x, c in elt.items() if self.src.key_degree(x) == deg}
            for (lam, a), c in self.h_prime_coords(part, deg).items():
                for x, v in self.tgt.right_a(self.image_word(lam), a).items():
                    _add(acc, x, c * v)
        return acc

    def h_prime_coords(self, elt: Mapping, degree: int) -> dict:
        ech = SparseEchelon()
        for lam, a in self.h_prime_basis(degree):
            ech.add(self.src.right_a(self.h_prime_word(lam), a), (lam, a))
        return ech.coords(dict(elt))

    def bijective(self, degree: int) -> bool:
        keys = self.h_prime_basis(degree)
        basis = self.tgt.basis(degree)
        pos = {x: i for i, x in enumerate(basis)}
        rows = []
        for lam, a in keys:
            v = self.tgt.right_a(self.image_word(lam), a)
            rows.append({pos[x]: c for x, c in v.items()})
        if len(rows) != len(basis):
            return False
        inv = smith_invariants(rows)
        return len(inv) == len(basis) and all(d == 1 for d in inv)

    def relations_in_source(self) -> list[tuple[str, int, int, bool]]:
        return h_prime_relations(self.src.h_prime, self.src, self.n)

    def relations_in_target(self) -> list[tuple[str, int, int, bool]]:
        return h_prime_relations(self.image_generator, self.tgt, self.n)

    def kills_high_generators(self) -> bool:
        return all(not self.image_generator(r) for r in range(self.n - self.k + 1, self.n + 1))

    def multiplicative(self, x: Mapping, y: Mapping) -> bool:
        lhs = self.apply(self.src.mul(x, y))
        rhs = self.tgt.mul(self.apply(x), self.apply(y))
        return lhs == rhs


def gamma_iso(k: int, n: int) -> GammaMap:
    return GammaMap(k, n)
