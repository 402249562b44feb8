"""The A_n-bases b_m(a, ω) of e'_{[l,m]} ONH_m^n e_{[k,m]}.

Elements are evaluated in the operator model of ONH_m^n and compared through
their flattened coordinates. A term is a free right A_n-module; in a fixed
degree its Z-basis is ``b · c`` for basis labels b and A_n monomials c.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable

from ..deform.an import AMono, monomials_of_degree
from ..deform.onhkn import CyclotomicModel, cyclotomic_model
from ..grading import GradedScalar, qfactorial
from .._kernels import rank_mod_p
from ..linalg import NotInSpan, SparseEchelon
from ..oddnilhecke import IntervalData, interval_w0_word, interval_w0_word_prime
from ..skewpoly import Exp, Permutation, SkewPoly

Label = tuple[Exp, tuple[int, ...]]  # (a, oneline of ω)


def y_set(n: int, l: int, m: int) -> list[Exp]:
    """a with a_i <= n - i and a_l > ... > a_m."""
    out = []
    for a in product(*[range(n - i + 1) for i in range(1, m + 1)]):
        tail = a[l - 1:]
        if all(x > y for x, y in zip(tail, tail[1:])):
            out.append(tuple(a))
    return out


def coset_reps(m: int, k: int) -> list[Permutation]:
    """Minimal representatives of S_m / S_{[k,m]}: ω(k) < ... < ω(m)."""
    out = []
    for w in Permutation.all(m):
        tail = w.oneline[k - 1:] if k <= m else ()
        if all(x < y for x, y in zip(tail, tail[1:])):
            out.append(w)
    return sorted(out)


def embed(w: Permutation, size: int) -> Permutation:
    return Permutation(tuple(w.oneline) + tuple(range(w.n + 1, size + 1)))


def element_word(l: int, k: int, top: int, a: Exp, w: Permutation, size: int | None = None) -> list[tuple]:
    """Factors of ``e'_{[l,top]} x^a τ_w e_{[k,top]}`` in ONH_size (size >= top)."""
    size = top if size is None else size
    a = tuple(a) + (0,) * (size - len(a))
    word: list[tuple] = []
    if l <= top:
        word += [("poly", IntervalData(l, top, size).x_prime), ("word", interval_w0_word_prime(l, top))]
    word += [("poly", SkewPoly.monomial(a)), ("perm", embed(w, size))]
    if k <= top:
        word += [("word", interval_w0_word(k, top)), ("poly", IntervalData(k, top, size).x)]
    return word


class TermSpace:
    """``e'_{[l,m]} ONH_m^n e_{[k,m]}`` with its basis b_m(a, ω)."""

    def __init__(self, n: int, m: int, l: int, k: int):
        self.n, self.m, self.l, self.k = n, m, l, k
        self.model: CyclotomicModel = cyclotomic_model(m, n)
        self.ys = y_set(n, l, m)
        self.cosets = coset_reps(m, k)
        self.labels: list[Label] = [(a, w.oneline) for w in self.cosets for a in self.ys]
        self._flat: dict[Label, dict] = {}
        self._echelons: dict[int, SparseEchelon] = {}

    # ---------------------------------------------------------------- bookkeeping
    @staticmethod
    def label_degree(label: Label) -> int:
        a, w = label
        return 2 * sum(a) - 2 * Permutation(w).length()

    @staticmethod
    def label_parity(label: Label) -> int:
        a, w = label
        return (sum(a) + Permutation(w).length()) % 2

    def labels_of_degree(self, degree: int) -> list[tuple[Label, AMono]]:
        out = []
        for lab in self.labels:
            for c in monomials_of_degree(self.n, degree - self.label_degree(lab)):
                out.append((lab, c))
        return out

    def count_series(self, bound: int) -> dict[tuple[int, int], int]:
        """(degree, parity) -> rank over Z of the free A_n-module, to ``bound``."""
        out: dict[tuple[int, int], int] = {}
        lo = min((self.label_degree(lab) for lab in self.labels), default=0)
        for deg in range(lo - lo % 2, bound + 1, 2):
            for lab, c in self.labels_of_degree(deg):
                key = (deg, (self.label_parity(lab) + c[1]) % 2)
                out[key] = out.get(key, 0) + 1
        return out

    # ---------------------------------------------------------------- elements
    def word(self, label: Label) -> list[tuple]:
        a, w = label
        return element_word(self.l, self.k, self.m, a, Permutation(w))

    def flat(self, label: Label) -> dict:
        hit = self._flat.get(label)
        if hit is None:
            hit = self.model.flatten(self.word(label))
            self._flat[label] = hit
        return hit

    def flat_times(self, label: Label, c: AMono) -> dict:
        return self.model.right_a(self.flat(label), c)

    def echelon(self, degree: int) -> SparseEchelon:
        ech = self._echelons.get(degree)
        if ech is None:
            ech = SparseEchelon()
            for lab, c in self.labels_of_degree(degree):
                if not ech.add(self.flat_times(lab, c), (lab, c)):
                    raise ArithmeticError(f"basis dependent in degree {degree}: {(lab, c)}")
            self._echelons[degree] = ech
        return ech

    def solve(self, flat: dict, degree: int) -> dict[Label, dict[AMono, int]]:
        """A_n-coordinates of a flattened element on the basis."""
        coords = self.echelon(degree).coords(flat)
        out: dict[Label, dict[AMono, int]] = {}
        for (lab, c), v in coords.items():
            out.setdefault(lab, {})[c] = v
        return out

    def contains(self, flat: dict, degree: int) -> bool:
        try:
            self.echelon(degree).coords(flat)
            return True
        except NotInSpan:
            return False


def term_grdim_formula(n: int, m: int, l: int, k: int) -> GradedScalar:
    """``q^{C(m-l+1,2)+C(m-k+1,2)+m(n-m)} [m]![n]!/([n-m]![m-l+1]![m-k+1]!)``."""
    L, K = max(m - l + 1, 0), max(m - k + 1, 0)
    shift = L * (L - 1) // 2 + K * (K - 1) // 2 + m * (n - m)
    num = qfactorial(m) * qfactorial(n)
    den = qfactorial(n - m) * qfactorial(L) * qfactorial(K)
    return GradedScalar.q(shift) * num.exact_div(den)


@lru_cache(maxsize=None)
def term_space(n: int, m: int, l: int, k: int) -> TermSpace:
    return TermSpace(n, m, l, k)


def onh_kn_space(k: int, n: int) -> TermSpace:
    """ONH_k^n itself: both intervals are trivial."""
    return term_space(n, k, k + 1, k + 1)


def spanning_sample(space: TermSpace, degree: int, limit: int | None = None) -> Iterable[list[tuple]]:
    """Words ``e' x^α τ_w e`` with α unrestricted, for spanning checks."""
    from ..skewpoly import monomials

    m = space.m
    count = 0
    for w in Permutation.all(m):
        t2 = degree + 2 * w.length()
        if t2 < 0 or t2 % 2:
            continue
        for alpha in monomials(m, t2 // 2):
            yield element_word(space.l, space.k, m, alpha, w)
            count += 1
            if limit is not None and count >= limit:
                return


def mod2_certificate(space: TermSpace) -> tuple[bool, int, int]:
    """Independence of the basis over A_n from one rank over GF(2).

    Flattened coordinates form a free A_n-module, so it suffices that the
    constant parts (A_n -> Z/2, χ = d = 0) are independent: by graded
    Nakayama the vectors then extend to a basis over A_n ⊗ Z/2, and a
    relation over A_n would survive reduction mod 2 after dividing out 2.
    """
    one = space.model.one_a
    vecs = []
    for lab in space.labels:
        vecs.append({key[:3]: v for key, v in space.flat(lab).items() if key[3] == one and v % 2})
    r = rank_mod_p(vecs, 2) if vecs else 0
    return r == len(vecs), r, len(vecs)


def count_matches_formula(space: TermSpace, bound: int) -> tuple[bool, dict, dict]:
    """Graded count of ``b · c`` against the closed formula times grdim(A_n), ignoring parity."""
    from ..deform.an import grdim_counts

    counts: dict[int, int] = {}
    for (deg, _p), c in space.count_series(bound).items():
        counts[deg] = counts.get(deg, 0) + c
    lo = min(counts, default=0)
    an = GradedScalar(grdim_counts(space.n, bound - lo))
    want: dict[int, int] = {}
    for (deg, _p), c in (term_grdim_formula(space.n, space.m, space.l, space.k) * an).terms.items():
        if deg <= bound:
            want[deg] = want.get(deg, 0) + c
    want = {d: c for d, c in want.items() if c}
    counts = {d: c for d, c in counts.items() if c}
    return counts == want, counts, want
