"""Skew polynomials, signed permutation action and odd divided differences.

Monomials are normal ordered ``x_1^{a_1} ... x_n^{a_n}`` and stored as
exponent tuples. Moving ``x^b`` past ``x^a`` costs ``(-1)^{sum_{i>j} a_i b_j}``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations as _iter_perms
from typing import Iterable, Iterator, Mapping, Sequence

from .grading import Degree

Exp = tuple[int, ...]


# ---------------------------------------------------------------- permutations

class Permutation:
    """Permutation of {1..n} in one-line notation, ``w = (w(1), ..., w(n))``.

    Composition is ``(u * v)(i) = u(v(i))`` and ``s_i`` swaps ``i, i+1``, so a
    word ``i_1 ... i_r`` stands for ``s_{i_1} ... s_{i_r}``.
    """

    __slots__ = ("_w", "_len", "_word")

    def __init__(self, oneline: Sequence[int]):
        w = tuple(int(v) for v in oneline)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"not a permutation: {w}")
        self._w = w
        self._len: int | None = None
        self._word: tuple[int, ...] | None = None

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        if not 1 <= i < n:
            raise ValueError(f"s_{i} not in S_{n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    @classmethod
    def from_word(cls, word: Iterable[int], n: int) -> "Permutation":
        w = list(range(1, n + 1))
        # right multiplication by s_i swaps positions i, i+1
        for i in word:
            if not 1 <= i < n:
                raise ValueError(f"letter {i} out of range for S_{n}")
            w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def all(cls, n: int) -> list["Permutation"]:
        return [cls(p) for p in _iter_perms(range(1, n + 1))]

    @property
    def n(self) -> int:
        return len(self._w)

    @property
    def oneline(self) -> tuple[int, ...]:
        return self._w

    def __call__(self, i: int) -> int:
        return self._w[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(self._w[v - 1] for v in other._w)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self._w, 1):
            inv[v - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        if self._len is None:
            w = self._w
            self._len = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
        return self._len

    def left_descent(self, i: int) -> bool:
        """True when l(s_i w) < l(w)."""
        inv = self.inverse()
        return inv(i) > inv(i + 1)

    def right_descent(self, i: int) -> bool:
        return self._w[i - 1] > self._w[i]

    def reduced_word(self) -> tuple[int, ...]:
        """Lexicographically smallest reduced word."""
        if self._word is None:
            self._word = _canonical_word(self._w)
        return self._word

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._w == other._w

    def __hash__(self) -> int:
        return hash(self._w)

    def __lt__(self, other: "Permutation") -> bool:
        return (self.length(), self._w) < (other.length(), other._w)

    def __repr__(self) -> str:
        return f"Permutation({list(self._w)})"


@lru_cache(maxsize=None)
def _canonical_word(w: tuple[int, ...]) -> tuple[int, ...]:
    # the first letter of the lex-smallest word is the smallest left descent
    n = len(w)
    pos = {v: i for i, v in enumerate(w)}
    for i in range(1, n):
        if pos[i] > pos[i + 1]:
            rest = list(w)
            # s_i * w swaps the values i and i+1
            a, b = pos[i], pos[i + 1]
            rest[a], rest[b] = rest[b], rest[a]
            return (i,) + _canonical_word(tuple(rest))
    return ()


def word_is_reduced(word: Sequence[int], n: int) -> bool:
    return Permutation.from_word(word, n).length() == len(word)


# ---------------------------------------------------------------- monomial signs

def mono_mul_sign(a: Exp, b: Exp) -> int:
    """Sign of ``x^a x^b = sign * x^{a+b}``."""
    s = 0
    suffix = 0
    for j in range(len(a) - 1, -1, -1):
        s += b[j] * suffix
        suffix += a[j]
    return -1 if s & 1 else 1


def letters_sign(letters: Sequence[int], n: int) -> tuple[int, Exp]:
    """Normal order a word in the variables by adjacent swaps (oracle)."""
    seq = list(letters)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            if seq[i] > seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                sign = -sign
                changed = True
    exp = [0] * n
    for v in seq:
        exp[v - 1] += 1
    return sign, tuple(exp)


def perm_mono(w: Permutation, a: Exp) -> tuple[int, Exp]:
    """``w(x^a) = sign * x^b``."""
    n = len(a)
    tot = sum(a)
    s = w.length() * tot
    for j in range(n):
        if not a[j]:
            continue
        wj = w._w[j]
        for jj in range(j + 1, n):
            if a[jj] and w._w[jj] < wj:
                s += a[j] * a[jj]
    b = [0] * n
    for j in range(n):
        b[w._w[j] - 1] = a[j]
    return (-1 if s & 1 else 1), tuple(b)


@lru_cache(maxsize=None)
def _dd_two(a: int, b: int) -> tuple[tuple[tuple[int, int], int], ...]:
    """``d(x_1^a x_2^b)`` in two variables as ((c, d), coeff) pairs."""
    out: dict[tuple[int, int], int] = {}
    if a > 0:
        # d(x_1 g) = g - x_2 d(g), g = x_1^{a-1} x_2^b
        out[(a - 1, b)] = 1
        for (c, d), v in _dd_two(a - 1, b):
            key = (c, d + 1)
            out[key] = out.get(key, 0) - (-1 if c & 1 else 1) * v
    elif b > 0:
        # d(x_2 g) = g - x_1 d(g), g = x_2^{b-1}
        out[(0, b - 1)] = 1
        for (c, d), v in _dd_two(0, b - 1):
            key = (c + 1, d)
            out[key] = out.get(key, 0) - v
    return tuple((k, v) for k, v in sorted(out.items()) if v)


def dd_mono(i: int, a: Exp) -> list[tuple[Exp, int]]:
    """``d_i(x^a)`` as a list of (exponent, coefficient)."""
    pre = sum(a[: i - 1])
    sign = -1 if pre & 1 else 1
    out = []
    for (c, d), v in _dd_two(a[i - 1], a[i]):
        b = a[: i - 1] + (c, d) + a[i + 1:]
        out.append((b, sign * v))
    return out


# ---------------------------------------------------------------- SkewPoly

class SkewPoly:
    """Element of the skew polynomial ring in ``n`` anticommuting variables."""

    __slots__ = ("n", "_t", "_hash")

    def __init__(self, n: int, terms: Mapping[Exp, int] | None = None, *, _trusted: bool = False):
        self.n = n
        if _trusted:
            self._t = terms  # type: ignore[assignment]
        else:
            acc: dict[Exp, int] = {}
            for e, c in (terms or {}).items():
                e = tuple(int(v) for v in e)
                if len(e) != n or min(e, default=0) < 0:
                    raise ValueError(f"bad exponent {e} for n={n}")
                acc[e] = acc.get(e, 0) + int(c)
            self._t = {e: c for e, c in acc.items() if c}
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, n: int) -> "SkewPoly":
        return cls(n, {}, _trusted=True)

    @classmethod
    def one(cls, n: int) -> "SkewPoly":
        return cls(n, {(0,) * n: 1}, _trusted=True)

    @classmethod
    def const(cls, n: int, c: int) -> "SkewPoly":
        return cls(n, {(0,) * n: c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, i: int, n: int) -> "SkewPoly":
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1}, _trusted=True)

    @classmethod
    def monomial(cls, exp: Sequence[int], c: int = 1) -> "SkewPoly":
        return cls(len(exp), {tuple(exp): c})

    @property
    def terms(self) -> dict[Exp, int]:
        return self._t

    def items(self) -> Iterator[tuple[Exp, int]]:
        return iter(self._t.items())

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._t == ({(0,) * self.n: other} if other else {})
        return isinstance(other, SkewPoly) and self.n == other.n and self._t == other._t

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._t.items())))
        return self._hash

    def _check(self, other: "SkewPoly") -> None:
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "SkewPoly | int") -> "SkewPoly":
        if isinstance(other, int):
            other = SkewPoly.const(self.n, other)
        self._check(other)
        acc = dict(self._t)
        for e, c in other._t.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return SkewPoly(self.n, acc, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "SkewPoly":
        return SkewPoly(self.n, {e: -c for e, c in self._t.items()}, _trusted=True)

    def __sub__(self, other: "SkewPoly | int") -> "SkewPoly":
        if isinstance(other, int):
            other = SkewPoly.const(self.n, other)
        return self + (-other)

    def __rsub__(self, other: int) -> "SkewPoly":
        return SkewPoly.const(self.n, other) - self

    def scale(self, c: int) -> "SkewPoly":
        if not c:
            return SkewPoly.zero(self.n)
        return SkewPoly(self.n, {e: c * v for e, v in self._t.items()}, _trusted=True)

    def __mul__(self, other: "SkewPoly | int") -> "SkewPoly":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        acc: dict[Exp, int] = {}
        n = self.n
        rng = range(n - 1, -1, -1)
        for a, ca in self._t.items():
            for b, cb in other._t.items():
                s = 0
                suffix = 0
                for j in rng:
                    s += b[j] * suffix
                    suffix += a[j]
                e = tuple(x + y for x, y in zip(a, b))
                v = ca * cb
                acc[e] = acc.get(e, 0) + (-v if s & 1 else v)
        return SkewPoly(n, {e: c for e, c in acc.items() if c}, _trusted=True)

    def __rmul__(self, other: int) -> "SkewPoly":
        return self.scale(other)

    def __pow__(self, k: int) -> "SkewPoly":
        out = SkewPoly.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    # grading
    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._t}) <= 1

    def degree(self) -> Degree:
        degs = {sum(e) for e in self._t}
        if len(degs) != 1:
            raise ValueError("zero or inhomogeneous polynomial has no degree")
        d = degs.pop()
        return Degree(2 * d, d)

    def components(self) -> dict[int, "SkewPoly"]:
        """Homogeneous components keyed by polynomial degree sum(a)."""
        out: dict[int, dict[Exp, int]] = {}
        for e, c in self._t.items():
            out.setdefault(sum(e), {})[e] = c
        return {d: SkewPoly(self.n, t, _trusted=True) for d, t in out.items()}

    def max_total(self) -> int:
        return max((sum(e) for e in self._t), default=-1)

    # operators
    def act(self, w: Permutation) -> "SkewPoly":
        if w.n != self.n:
            raise ValueError("permutation size mismatch")
        acc: dict[Exp, int] = {}
        for a, c in self._t.items():
            s, b = perm_mono(w, a)
            acc[b] = acc.get(b, 0) + s * c
        return SkewPoly(self.n, {e: c for e, c in acc.items() if c}, _trusted=True)

    def s(self, i: int) -> "SkewPoly":
        return self.act(Permutation.simple(i, self.n))

    def dd(self, i: int) -> "SkewPoly":
        if not 1 <= i < self.n:
            raise ValueError(f"d_{i} undefined for n={self.n}")
        acc: dict[Exp, int] = {}
        for a, c in self._t.items():
            for b, v in dd_mono(i, a):
                acc[b] = acc.get(b, 0) + c * v
        return SkewPoly(self.n, {e: c for e, c in acc.items() if c}, _trusted=True)

    def dd_word(self, word: Sequence[int]) -> "SkewPoly":
        """``d_{i_1} ... d_{i_r}(f)``, rightmost letter applied first."""
        f = self
        for i in reversed(word):
            f = f.dd(i)
            if not f:
                break
        return f

    def mod2(self) -> dict[Exp, int]:
        return {e: 1 for e, c in self._t.items() if c % 2}

    def __repr__(self) -> str:
        return format_poly(self)


def format_poly(f: SkewPoly) -> str:
    if not f.terms:
        return "0"
    parts = []
    for e, c in sorted(f.terms.items(), key=lambda t: (-sum(t[0]), tuple(-v for v in t[0]))):
        mono = "*".join(f"x{i + 1}" + (f"^{v}" if v > 1 else "") for i, v in enumerate(e) if v)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def x(i: int, n: int) -> SkewPoly:
    return SkewPoly.var(i, n)


def x_power(exp: Sequence[int]) -> SkewPoly:
    return SkewPoly.monomial(exp)


def monomials(n: int, total: int) -> Iterator[Exp]:
    """All exponent vectors of length n summing to ``total``."""
    if n == 0:
        if total == 0:
            yield ()
        return
    if n == 1:
        yield (total,)
        return
    for a in range(total, -1, -1):
        for rest in monomials(n - 1, total - a):
            yield (a,) + rest


def delta(n: int) -> Exp:
    """Staircase exponent (n-1, n-2, ..., 0)."""
    return tuple(range(n - 1, -1, -1))


def divide_central(f: SkewPoly, i: int, j: int) -> SkewPoly:
    """Exact quotient of f by the central element ``x_j^2 - x_i^2``.

    Solved per homogeneous component as a triangular integer system in the
    x_j exponent; a nonzero remainder raises ArithmeticError.
    """
    rem = dict(f.terms)
    quot: dict[Exp, int] = {}
    while rem:
        e = max(rem, key=lambda a: (a[j - 1], a))
        c = rem[e]
        if e[j - 1] < 2:
            raise ArithmeticError("not divisible by x_j^2 - x_i^2")
        qe = list(e)
        qe[j - 1] -= 2
        qe = tuple(qe)
        quot[qe] = quot.get(qe, 0) + c
        # subtract c * x^qe * (x_j^2 - x_i^2); squares are central so no signs
        for shift, sgn in ((j, 1), (i, -1)):
            t = list(qe)
            t[shift - 1] += 2
            t = tuple(t)
            v = rem.get(t, 0) - sgn * c
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return SkewPoly(f.n, {e: c for e, c in quot.items() if c})


def dd_closed(i: int, f: SkewPoly) -> SkewPoly:
    """Divided difference through the closed quotient formula."""
    n = f.n
    lin = x(i + 1, n) - x(i, n)
    num = lin * f - f.s(i) * lin
    return divide_central(num, i, i + 1)


