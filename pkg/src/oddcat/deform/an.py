"""The deformation ring A_n and polynomials in one odd variable over it.

A monomial is ``(beta, e)`` meaning ``chi_1^beta_1 ... chi_r^beta_r d^e`` with
``r = n // 2`` and ``e`` in {0, 1}. Degrees follow deg c_i = 2i, so
``deg chi_j = 4j`` and ``deg d = 2``; parity is ``e``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Mapping

from ..grading import Degree

AMono = tuple[tuple[int, ...], int]


def one_mono(n: int) -> AMono:
    return ((0,) * (n // 2), 0)


def mono_degree(m: AMono) -> int:
    beta, e = m
    return 4 * sum((j + 1) * b for j, b in enumerate(beta)) + 2 * e


def mono_parity(m: AMono) -> int:
    return m[1]


def mono_mul(n: int, a: AMono, b: AMono) -> AMono | None:
    """Product of monomials, or None when it vanishes."""
    e = a[1] + b[1]
    if e > 1:
        return None
    beta = tuple(x + y for x, y in zip(a[0], b[0]))
    if e and n % 2 == 0 and n >= 2 and beta[n // 2 - 1] > 0:
        return None
    return (beta, e)


def is_mono(n: int, m: AMono) -> bool:
    beta, e = m
    return not (e and n % 2 == 0 and n >= 2 and beta[n // 2 - 1] > 0)


@lru_cache(maxsize=None)
def monomials_of_degree(n: int, deg: int) -> tuple[AMono, ...]:
    """Basis monomials of A_n in the given degree."""
    if deg < 0 or deg % 2:
        return ()
    r = n // 2
    out: list[AMono] = []

    def rec(j: int, rem: int, acc: list[int]) -> None:
        if j == r:
            for e in (0, 1):
                if rem == 2 * e:
                    m = (tuple(acc), e)
                    if is_mono(n, m):
                        out.append(m)
            return
        w = 4 * (j + 1)
        for b in range(rem // w + 1):
            acc.append(b)
            rec(j + 1, rem - w * b, acc)
            acc.pop()

    rec(0, deg, [])
    return tuple(sorted(out))


def grdim_counts(n: int, bound: int) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for deg in range(0, bound + 1, 2):
        for m in monomials_of_degree(n, deg):
            key = (deg, m[1])
            out[key] = out.get(key, 0) + 1
    return out


class AnScalar:
    """Element of A_n."""

    __slots__ = ("n", "_t")

    def __init__(self, n: int, terms: Mapping[AMono, int] | None = None):
        self.n = n
        acc: dict[AMono, int] = {}
        for m, c in (terms or {}).items():
            if not is_mono(n, m):
                continue
            acc[m] = acc.get(m, 0) + c
        self._t = {m: c for m, c in acc.items() if c}

    @classmethod
    def one(cls, n: int) -> "AnScalar":
        return cls(n, {one_mono(n): 1})

    @classmethod
    def zero(cls, n: int) -> "AnScalar":
        return cls(n)

    @classmethod
    def chi(cls, j: int, n: int) -> "AnScalar":
        if j == 0:
            return cls.one(n)
        if not 1 <= j <= n // 2:
            return cls.zero(n)
        beta = [0] * (n // 2)
        beta[j - 1] = 1
        return cls(n, {(tuple(beta), 0): 1})

    @classmethod
    def d(cls, n: int) -> "AnScalar":
        return cls(n, {((0,) * (n // 2), 1): 1})

    @classmethod
    def c(cls, i: int, n: int) -> "AnScalar":
        return cls(n, {m: 1 for m in [c_mono(i, n)] if m is not None})

    @property
    def terms(self) -> dict[AMono, int]:
        return self._t

    def is_zero(self) -> bool:
        return not self._t

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = AnScalar.one(self.n) * other
        return isinstance(other, AnScalar) and self.n == other.n and self._t == other._t

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._t.items())))

    def __add__(self, other: "AnScalar") -> "AnScalar":
        acc = dict(self._t)
        for m, c in other._t.items():
            acc[m] = acc.get(m, 0) + c
        return AnScalar(self.n, acc)

    def __neg__(self) -> "AnScalar":
        return AnScalar(self.n, {m: -c for m, c in self._t.items()})

    def __sub__(self, other: "AnScalar") -> "AnScalar":
        return self + (-other)

    def __mul__(self, other: "AnScalar | int") -> "AnScalar":
        if isinstance(other, int):
            return AnScalar(self.n, {m: c * other for m, c in self._t.items()})
        if other.n != self.n:
            raise ValueError("A_n size mismatch")
        acc: dict[AMono, int] = {}
        for a, ca in self._t.items():
            for b, cb in other._t.items():
                m = mono_mul(self.n, a, b)
                if m is not None:
                    acc[m] = acc.get(m, 0) + ca * cb
        return AnScalar(self.n, acc)

    __rmul__ = __mul__

    def degree(self) -> Degree:
        degs = {Degree(mono_degree(m), m[1]) for m in self._t}
        if len(degs) != 1:
            raise ValueError("zero or inhomogeneous element")
        return degs.pop()

    def parity(self) -> int:
        ps = {m[1] for m in self._t}
        if len(ps) != 1:
            raise ValueError("zero or mixed-parity element")
        return ps.pop()

    def specialize(self, mode: str) -> "AnScalar":
        """``d0`` kills d; ``undeformed`` kills every generator."""
        if mode == "d0":
            keep = {m: c for m, c in self._t.items() if m[1] == 0}
        elif mode == "undeformed":
            keep = {m: c for m, c in self._t.items() if m == one_mono(self.n)}
        else:
            raise ValueError(mode)
        return AnScalar(self.n, keep)

    def __repr__(self) -> str:
        if not self._t:
            return "0"
        return " + ".join(f"{c}*{format_mono(m)}" for m, c in sorted(self._t.items()))


def format_mono(m: AMono) -> str:
    beta, e = m
    bits = [f"chi{j + 1}" + (f"^{b}" if b > 1 else "") for j, b in enumerate(beta) if b]
    if e:
        bits.append("d")
    return "*".join(bits) or "1"


def c_mono(i: int, n: int) -> AMono | None:
    """Monomial of c_i (None when c_i = 0)."""
    if i < 0 or i > n:
        return None
    r = n // 2
    beta = [0] * r
    j, e = divmod(i, 2)
    if j:
        if j > r:
            return None
        beta[j - 1] = 1
    m = (tuple(beta), e)
    return m if is_mono(n, m) else None


class AnPolynomial:
    """Polynomial ``sum_l a_l t^l`` with coefficients in A_n and t odd.

    Coefficients are kept on the left; ``t a = (-1)^{|a|} a t``.
    """

    def __init__(self, n: int, coeffs: Mapping[int, AnScalar] | None = None):
        self.n = n
        self.coeffs = {p: a for p, a in (coeffs or {}).items() if not a.is_zero()}

    @classmethod
    def t(cls, n: int) -> "AnPolynomial":
        return cls(n, {1: AnScalar.one(n)})

    @classmethod
    def const(cls, a: AnScalar) -> "AnPolynomial":
        return cls(a.n, {0: a})

    def __add__(self, other: "AnPolynomial") -> "AnPolynomial":
        acc = dict(self.coeffs)
        for p, a in other.coeffs.items():
            acc[p] = acc[p] + a if p in acc else a
        return AnPolynomial(self.n, acc)

    def __neg__(self) -> "AnPolynomial":
        return AnPolynomial(self.n, {p: -a for p, a in self.coeffs.items()})

    def __sub__(self, other: "AnPolynomial") -> "AnPolynomial":
        return self + (-other)

    def __mul__(self, other: "AnPolynomial") -> "AnPolynomial":
        acc: dict[int, AnScalar] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                # a t^i b t^j = a * (t^i b) t^j, moving b left past t^i
                for m, c in b.terms.items():
                    s = -1 if (i * m[1]) % 2 else 1
                    term = a * AnScalar(self.n, {m: s * c})
                    acc[i + j] = acc[i + j] + term if i + j in acc else term
        return AnPolynomial(self.n, acc)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AnPolynomial) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return " + ".join(f"({a})*t^{p}" for p, a in sorted(self.coeffs.items())) or "0"


def a_poly(n: int) -> AnPolynomial:
    """``sum_l (-1)^l t^l c_{n-l}`` rewritten with coefficients on the left."""
    out = AnPolynomial(n)
    t = AnPolynomial.t(n)
    for l in range(n + 1):
        tl = AnPolynomial(n, {0: AnScalar.one(n)})
        for _ in range(l):
            tl = tl * t
        term = tl * AnPolynomial.const(AnScalar.c(n - l, n) * ((-1) ** l))
        out = out + term
    return out


def a_poly_relations(n: int) -> tuple[bool, bool]:
    """Check t a(t) = a(t)(t - 2d) and a(t) t = (t + (-1)^n 2d) a(t)."""
    a = a_poly(n)
    t = AnPolynomial.t(n)
    two_d = AnPolynomial.const(AnScalar.d(n) * 2)
    first = t * a == a * (t - two_d)
    second = a * t == (t + (two_d if n % 2 == 0 else -two_d)) * a
    return first, second
