"""Graded bookkeeping: the scalar ring Z[q, q^-1, pi]/(pi^2 - 1).

Elements are stored as ``{(q_exp, pi_exp): coeff}`` with ``pi_exp`` in {0, 1}.
The ring embeds into two copies of Z[q, q^-1] through ``pi -> +1`` and
``pi -> -1``; exact division is done in each copy and glued back, which is
how quantum binomials are shown to be genuine ring elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping


@dataclass(frozen=True, order=True)
class Degree:
    """Bidegree (q-degree, parity) of a homogeneous element."""

    z: int
    p: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", self.p % 2)

    def __add__(self, other: "Degree") -> "Degree":
        return Degree(self.z + other.z, self.p + other.p)

    def __neg__(self) -> "Degree":
        return Degree(-self.z, self.p)


def _clean(terms: Mapping[tuple[int, int], int]) -> dict[tuple[int, int], int]:
    return {k: v for k, v in terms.items() if v}


class GradedScalar:
    """Element of Z[q, q^-1, pi]/(pi^2 - 1)."""

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        acc: dict[tuple[int, int], int] = {}
        for (e, p), c in (terms or {}).items():
            key = (int(e), int(p) % 2)
            acc[key] = acc.get(key, 0) + int(c)
        self._t = _clean(acc)
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c: int) -> "GradedScalar":
        return cls({(0, 0): c})

    @classmethod
    def q(cls, e: int = 1) -> "GradedScalar":
        return cls({(e, 0): 1})

    @classmethod
    def pi(cls) -> "GradedScalar":
        return cls({(0, 1): 1})

    @classmethod
    def from_laurent_pair(cls, plus: Mapping[int, int], minus: Mapping[int, int]) -> "GradedScalar":
        """Glue the images under pi -> 1 and pi -> -1 back together."""
        out: dict[tuple[int, int], int] = {}
        for e in set(plus) | set(minus):
            a, b = plus.get(e, 0), minus.get(e, 0)
            if (a + b) % 2:
                raise ArithmeticError("specializations are not congruent mod 2")
            out[(e, 0)] = (a + b) // 2
            out[(e, 1)] = (a - b) // 2
        return cls(out)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = GradedScalar.const(other)
        return isinstance(other, GradedScalar) and self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __add__(self, other: "GradedScalar | int") -> "GradedScalar":
        other = _coerce(other)
        acc = dict(self._t)
        for k, v in other._t.items():
            acc[k] = acc.get(k, 0) + v
        return GradedScalar(acc)

    __radd__ = __add__

    def __neg__(self) -> "GradedScalar":
        return GradedScalar({k: -v for k, v in self._t.items()})

    def __sub__(self, other: "GradedScalar | int") -> "GradedScalar":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "GradedScalar":
        return _coerce(other) - self

    def __mul__(self, other: "GradedScalar | int") -> "GradedScalar":
        other = _coerce(other)
        acc: dict[tuple[int, int], int] = {}
        for (e1, p1), c1 in self._t.items():
            for (e2, p2), c2 in other._t.items():
                k = (e1 + e2, (p1 + p2) % 2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return GradedScalar(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "GradedScalar":
        out = GradedScalar.const(1)
        for _ in range(k):
            out = out * self
        return out

    def specialize(self, pi: int) -> dict[int, int]:
        """Image in Z[q, q^-1] under pi -> +-1."""
        acc: dict[int, int] = {}
        for (e, p), c in self._t.items():
            acc[e] = acc.get(e, 0) + (c if p == 0 or pi == 1 else -c)
        return {e: c for e, c in acc.items() if c}

    def exact_div(self, other: "GradedScalar") -> "GradedScalar":
        """Exact quotient; raises ArithmeticError on a nonzero remainder."""
        parts = []
        for s in (1, -1):
            parts.append(laurent_exact_div(self.specialize(s), other.specialize(s)))
        return GradedScalar.from_laurent_pair(*parts)

    def __repr__(self) -> str:
        if not self._t:
            return "0"
        bits = []
        for (e, p), c in sorted(self._t.items(), reverse=True):
            mono = ("q^%d" % e if e else "") + ("pi" if p else "")
            bits.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(bits)


def _coerce(x: "GradedScalar | int") -> GradedScalar:
    return x if isinstance(x, GradedScalar) else GradedScalar.const(x)


def laurent_exact_div(num: Mapping[int, int], den: Mapping[int, int]) -> dict[int, int]:
    """Long division of Laurent polynomials over Z, demanding zero remainder."""
    den = {e: c for e, c in den.items() if c}
    if not den:
        raise ZeroDivisionError("division by zero")
    rem = {e: c for e, c in num.items() if c}
    if not rem:
        return {}
    shift = min(rem) - min(den)
    d0 = min(den)
    den = {e - d0: c for e, c in den.items()}
    n0 = min(rem)
    rem = {e - n0: c for e, c in rem.items()}
    top = max(den)
    lead = den[top]
    quot: dict[int, int] = {}
    while rem and max(rem) >= top:
        e = max(rem)
        c = rem[e]
        if c % lead:
            raise ArithmeticError("inexact division")
        qc, qe = c // lead, e - top
        quot[qe] = qc
        for de, dc in den.items():
            v = rem.get(qe + de, 0) - qc * dc
            if v:
                rem[qe + de] = v
            else:
                rem.pop(qe + de, None)
    if rem:
        raise ArithmeticError("inexact division")
    return {e + shift: c for e, c in quot.items()}


@lru_cache(maxsize=None)
def qint(n: int) -> GradedScalar:
    """Odd quantum integer [n]_{q,pi}."""
    if n >= 0:
        return GradedScalar({(n - 1 - 2 * j, j): 1 for j in range(n)})
    m = -n
    inner = GradedScalar({(m - 1 - 2 * j, j): 1 for j in range(m)})
    return -(GradedScalar({(0, n % 2): 1}) * inner)


@lru_cache(maxsize=None)
def qfactorial(n: int) -> GradedScalar:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    out = GradedScalar.const(1)
    for i in range(1, n + 1):
        out = out * qint(i)
    return out


@lru_cache(maxsize=None)
def qbinomial(n: int, k: int) -> GradedScalar:
    """Odd quantum binomial, computed by exact division of factorials."""
    if k < 0 or k > n:
        return GradedScalar()
    return qfactorial(n).exact_div(qfactorial(k) * qfactorial(n - k))


def qbinomial_pascal(n: int, k: int) -> GradedScalar:
    """Independent recursion used as an oracle for :func:`qbinomial`.

    Specialized at pi = +-1 each side is a Gaussian binomial in the
    quantum integers [m]_{+-}; we use the two-sided Pascal rule there.
    """
    parts = []
    for s in (1, -1):
        parts.append(_pascal_special(n, k, s))
    return GradedScalar.from_laurent_pair(*parts)


@lru_cache(maxsize=None)
def _pascal_special(n: int, k: int, s: int) -> dict[int, int]:
    # [n choose k] = q^(n-k) [n-1 choose k-1] + s^k q^(-k) [n-1 choose k]  (pi = s)
    if k == 0 or k == n:
        return {0: 1}
    if k < 0 or k > n:
        return {}
    acc: dict[int, int] = {}
    for e, c in _pascal_special(n - 1, k - 1, s).items():
        acc[e + n - k] = acc.get(e + n - k, 0) + c
    sign = s ** k
    for e, c in _pascal_special(n - 1, k, s).items():
        acc[e - k] = acc.get(e - k, 0) + sign * c
    return {e: c for e, c in acc.items() if c}


class GradedSeries:
    """Graded dimension ``numerator / prod_i (1 - q^(2 i))``.

    Denominators are restricted to that family so that power series
    expansion in nonnegative powers of q is always available.
    """

    def __init__(self, numerator: GradedScalar | int, denominators: Iterable[int] = ()):
        self.numerator = _coerce(numerator)
        self.denominators = tuple(sorted(int(i) for i in denominators))
        if any(i <= 0 for i in self.denominators):
            raise ValueError("denominator exponents must be positive")

    def __mul__(self, other: "GradedSeries | GradedScalar | int") -> "GradedSeries":
        if isinstance(other, GradedSeries):
            return GradedSeries(self.numerator * other.numerator, self.denominators + other.denominators)
        return GradedSeries(self.numerator * _coerce(other), self.denominators)

    __rmul__ = __mul__

    def expand(self, max_degree: int) -> GradedScalar:
        """Truncated expansion: all terms of q-degree <= max_degree."""
        cur = {k: v for k, v in self.numerator.terms.items() if k[0] <= max_degree}
        for i in self.denominators:
            step = 2 * i
            nxt: dict[tuple[int, int], int] = {}
            for (e, p), c in cur.items():
                ee = e
                while ee <= max_degree:
                    nxt[(ee, p)] = nxt.get((ee, p), 0) + c
                    ee += step
            cur = nxt
        return GradedScalar(cur)

    def coefficients(self, max_degree: int) -> dict[tuple[int, int], int]:
        return self.expand(max_degree).terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedSeries):
            return NotImplemented
        lhs = self.numerator
        for i in other.denominators:
            lhs = lhs * (1 - GradedScalar.q(2 * i))
        rhs = other.numerator
        for i in self.denominators:
            rhs = rhs * (1 - GradedScalar.q(2 * i))
        return lhs == rhs

    def __repr__(self) -> str:
        den = "".join(f"(1-q^{2 * i})" for i in self.denominators)
        return f"({self.numerator})/{den or '1'}"


def grdim_from_counts(counts: Mapping[tuple[int, int], int]) -> GradedScalar:
    """Turn a table ``{(degree, parity): rank}`` into a scalar."""
    return GradedScalar(counts)
