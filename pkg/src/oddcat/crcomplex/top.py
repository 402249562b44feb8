"""Top cohomology C_{n,k} of the complex and invertibility of its truncation.

C_{n,k} is the last term modulo the image of the last differential. The image
has a basis of signed basis labels, so the quotient is free on the remaining
labels and projection just drops image coordinates.

The truncation e'_{[1,n-k]} C e_{[1,k]} is a (M_{n-k}^n, M_k^n)-bimodule
with left action by polynomials in x_1..x_{n-k} and right action by
polynomials in x_1..x_k followed by e_{[1,k]}. Ω(f) = f · b_{k,n} and the
algebra map u is defined by b_{k,n} · m = u(m) · b_{k,n}.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product
from math import comb

from ..deform.an import AMono, mono_mul, monomials_of_degree, one_mono
from ..deform.grassmannian import grassmannian
from ..deform.onhkn import kappa_poly, kappa_twist
from ..linalg import NotInSpan, SparseEchelon, smith_invariants
from ..oddnilhecke import IntervalData, interval_w0_word, interval_w0_word_prime
from ..oddsym import h_product, schur
from ..skewpoly import Exp, Permutation, SkewPoly
from .complex import complex_for
from .terms import Label, embed


def _add(acc: dict, key, c: int) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def pad(f: SkewPoly, n: int) -> SkewPoly:
    """View a polynomial in the first variables inside n variables."""
    return SkewPoly(n, {e + (0,) * (n - f.n): c for e, c in f.terms.items()})


def sigma_k(n: int, k: int) -> Permutation:
    """Longest minimal representative of S_n / (S_k x S_{n-k})."""
    return Permutation(tuple(range(n - k + 1, n + 1)) + tuple(range(1, n - k + 1)))


def _e_prime(l: int, m: int, n: int) -> list[tuple]:
    if l > m:
        return []
    return [("poly", IntervalData(l, m, n).x_prime), ("word", interval_w0_word_prime(l, m))]


def _e(l: int, m: int, n: int) -> list[tuple]:
    if l > m:
        return []
    return [("word", interval_w0_word(l, m)), ("poly", IntervalData(l, m, n).x)]


def _is_unimodular(entries: list[dict], size: int) -> bool:
    if len(entries) != size:
        return False
    inv = smith_invariants(entries)
    return len(inv) == size and all(v == 1 for v in inv)


class TopCohomology:
    def __init__(self, n: int, k: int):
        self.n, self.k = n, k
        self.cx = complex_for(n, k)
        self.term = self.cx.term(n)
        self.model = self.term.model
        self.one = one_mono(n)
        rs = self.cx.rs
        self.image = set(self.cx.image_labels(n - 1)) if len(rs) > 1 else set()
        self.basis_labels: list[Label] = [lab for lab in self.term.labels if lab not in self.image]
        self._gbasis: dict[int, tuple[list, SparseEchelon]] = {}
        self._omega: dict[int, tuple[list, SparseEchelon]] = {}

    # ---------------------------------------------------------------- projection
    def degree_of(self, flat: dict) -> int:
        degs = {self.model.flat_degree(key) for key in flat}
        if len(degs) != 1:
            raise ValueError("zero or inhomogeneous element")
        return degs.pop()

    def project(self, flat: dict, degree: int | None = None) -> dict:
        """C-coordinates ``{(label, c): v}`` of an element of the top term."""
        if not flat:
            return {}
        deg = self.degree_of(flat) if degree is None else degree
        coords = self.term.echelon(deg).coords(flat)
        return {key: v for key, v in coords.items() if key[0] not in self.image}

    def evaluate(self, word: list[tuple], a: AMono | None = None) -> dict:
        flat = self.model.flatten(word)
        if a is not None and a != self.one:
            flat = self.model.right_a(flat, a)
        return self.project(flat)

    # ---------------------------------------------------------------- stated basis
    def stated_element_word(self, a: Exp, w: Permutation) -> list[tuple]:
        """``x^a e'_{[n-k+1,n]} x_{[n-k+1,n]} τ_{σ_k} τ_w e_{[k+1,n]}``."""
        n, k = self.n, self.k
        word: list[tuple] = [("poly", SkewPoly.monomial(tuple(a) + (0,) * k))]
        word += _e_prime(n - k + 1, n, n)
        word += [("poly", IntervalData(n - k + 1, n, n).x), ("perm", sigma_k(n, k)), ("perm", embed(w, n))]
        word += _e(k + 1, n, n)
        return word

    def stated_labels(self) -> list[tuple[Exp, Permutation]]:
        n, k = self.n, self.k
        xs = list(product(*[range(n - i + 1) for i in range(1, n - k + 1)]))
        return [(a, w) for w in Permutation.all(k) for a in xs] if k else [(a, Permutation(())) for a in xs]

    def check_stated_basis(self) -> tuple[bool, list]:
        """Each stated element is ± one quotient basis label, bijectively."""
        hits = {}
        bad = []
        for a, w in self.stated_labels():
            coords = self.evaluate(self.stated_element_word(a, w))
            if len(coords) != 1:
                bad.append((a, w.oneline, len(coords)))
                continue
            (lab, c), v = next(iter(coords.items()))
            if c != self.one or abs(v) != 1 or lab in hits:
                bad.append((a, w.oneline, lab, v))
                continue
            hits[lab] = (a, w.oneline)
        ok = not bad and set(hits) == set(self.basis_labels)
        return ok, bad

    # ---------------------------------------------------------------- truncation
    def b_word(self) -> list[tuple]:
        """``b_{k,n} = x'_{[1,n-k]} x'_{[n-k+1,n]} τ_{w0} x_{[k+1,n]} x_{[1,k]}``."""
        n, k = self.n, self.k
        return [
            ("poly", IntervalData(1, n - k, n).x_prime),
            ("poly", IntervalData(n - k + 1, n, n).x_prime),
            ("word", interval_w0_word(1, n)),
            ("poly", IntervalData(k + 1, n, n).x),
            ("poly", IntervalData(1, k, n).x),
        ]

    def b_degree(self) -> int:
        n, k = self.n, self.k
        return 2 * ((n - k) * (n - k - 1) + k * (k - 1)) - n * (n - 1)

    def b_parity(self) -> int:
        return comb(self.n, 2) % 2

    def g_word(self, a: Exp) -> list[tuple]:
        """``x'_{[1,n-k]} ∂_{w0[1,n-k]}(x^a) x'_{[n-k+1,n]} τ_{w0} x_{[k+1,n]} x_{[1,k]}``."""
        n, k = self.n, self.k
        f = SkewPoly.monomial(tuple(a) + (0,) * k).dd_word(interval_w0_word(1, n - k))
        word = self.b_word()
        return [word[0], ("poly", f)] + word[1:]

    def g_exponents(self) -> list[Exp]:
        return [tuple(sorted(c, reverse=True)) for c in combinations(range(self.n), self.n - self.k)]

    def truncated_basis(self, degree: int) -> tuple[list, SparseEchelon]:
        """Z-basis ``g_a · c`` of e'Ce in one degree, with an echelon for solving."""
        hit = self._gbasis.get(degree)
        if hit is None:
            labels, ech = [], SparseEchelon()
            for a in self.g_exponents():
                base = self.model.flatten(self.g_word(a))
                if not base:
                    continue
                d0 = self.degree_of(base)
                for c in monomials_of_degree(self.n, degree - d0):
                    v = self.project(self.model.right_a(base, c), degree)
                    if not ech.add(v, (a, c)):
                        raise ArithmeticError(f"truncated basis dependent at {(a, c)}")
                    labels.append((a, c))
            hit = (labels, ech)
            self._gbasis[degree] = hit
        return hit

    def truncation_word(self, label: Label) -> list[tuple]:
        n, k = self.n, self.k
        return _e_prime(1, n - k, n) + self.term.word(label) + _e(1, k, n)

    def check_truncation(self, bound: int) -> tuple[bool, list]:
        """e' b e lies in the integral span of the g_a · c for every basis label b."""
        bad = []
        for lab in self.basis_labels:
            flat = self.model.flatten(self.truncation_word(lab))
            if not flat:
                continue
            d0 = self.degree_of(flat)
            for deg in range(d0, bound + 1, 2):
                _labels, ech = self.truncated_basis(deg)
                for c in monomials_of_degree(self.n, deg - d0):
                    v = self.project(self.model.right_a(flat, c), deg)
                    try:
                        ech.coords(v)
                    except NotInSpan:
                        bad.append((lab, c))
                break  # A_n-linearity: checking c = 1 suffices, higher c follow
        return not bad, bad

    # ---------------------------------------------------------------- Ω and u
    def left_twist(self) -> int:
        """Parity twist ψ = φ^t on the left factor, t = twist(n-k) + C(n-k, 2)."""
        j = self.n - self.k
        return (kappa_twist(j) + comb(j, 2)) % 2

    def omega_image(self, lam: tuple, a: AMono) -> dict:
        """``(ψ(h_λ) ⊗ a) · b_{k,n}`` in C, the left action going through e'_{[1,n-k]}."""
        n, k = self.n, self.k
        f = pad(h_product(tuple(lam), n - k), n) if n - k else SkewPoly.one(n)
        v = self.evaluate(_e_prime(1, n - k, n) + [("poly", f)] + self.b_word(), a)
        if (a[1] * self.b_parity() + self.left_twist() * sum(lam)) % 2:
            v = {x: -c for x, c in v.items()}
        return v

    def omega_basis(self, degree: int) -> tuple[list, SparseEchelon]:
        """Images of the box basis of M_{n-k}^n landing in the given degree."""
        hit = self._omega.get(degree)
        if hit is None:
            g = grassmannian(self.n - self.k, self.n)
            labels, ech = [], SparseEchelon()
            for key in g.basis(degree - self.b_degree()):
                v = self.omega_image(*key)
                if not ech.add(v, key):
                    raise ArithmeticError(f"Ω not injective at {key}")
                labels.append(key)
            hit = (labels, ech)
            self._omega[degree] = hit
        return hit

    def check_omega(self, bound: int) -> tuple[bool, list]:
        """Ω maps the box basis to a Z-basis of e'Ce degreewise (unimodular matrix)."""
        bad = []
        lo = self.b_degree()
        for deg in range(lo, bound + 1, 2):
            glabels, gech = self.truncated_basis(deg)
            olabels, _ = self.omega_basis(deg)
            rows = []
            try:
                for key in olabels:
                    coords = gech.coords(self.omega_image(*key))
                    rows.append({glabels.index(x): v for x, v in coords.items()})
            except (NotInSpan, ArithmeticError):
                bad.append(("span", deg))
                continue
            if not _is_unimodular(rows, len(glabels)):
                bad.append(("unimodular", deg, len(rows), len(glabels)))
        return not bad, bad

    def omega_schur_signed(self) -> bool:
        """Ω(s_λ) = ± g_a with a = λ + staircase, as the left-module argument states."""
        n, k = self.n, self.k
        m = n - k
        for a in self.g_exponents():
            lam = tuple(a[i] - (m - 1 - i) for i in range(m))
            f = pad(schur(lam, m), n) if m else SkewPoly.one(n)
            got = self.evaluate(_e_prime(1, m, n) + [("poly", f)] + self.b_word())
            want = self.evaluate(self.g_word(a))
            if not (got == want or got == {x: -v for x, v in want.items()}):
                return False
        return True

    def right_image(self, lam: tuple, a: AMono) -> dict:
        """``b_{k,n} · (h_λ ⊗ a)`` in C: right multiplication by κ(h_λ) e_{[1,k]}."""
        n, k = self.n, self.k
        f = pad(kappa_poly(h_product(tuple(lam), k)), n) if k else SkewPoly.one(n)
        return self.evaluate(self.b_word() + [("poly", f)] + _e(1, k, n), a)

    def u(self, key) -> dict:
        """u(h_λ ⊗ a) on the box basis of M_{n-k}^n."""
        v = self.right_image(*key)
        if not v:
            return {}
        deg = self.b_degree() + grassmannian(self.k, self.n).key_degree(key)
        _labels, ech = self.omega_basis(deg)
        return ech.coords(v)

    def check_u(self, bound: int) -> dict[str, bool | list]:
        """Well-definedness (h'_m acts by 0), multiplicativity on generators, bijectivity."""
        n, k = self.n, self.k
        gk, gm = grassmannian(k, n), grassmannian(n - k, n)
        out: dict = {"kills_relations": True, "unit": True, "bijective": True, "multiplicative": True, "failures": []}
        # h'_m for n-k < m <= n acts by zero from the right
        for mm in range(n - k + 1, n + 1):
            acc: dict = {}
            for (lam, a), c in gk.h_prime_unreduced(mm).items():
                for x, v in self.right_image(lam, a).items():
                    _add(acc, x, c * v)
            if acc:
                out["kills_relations"] = False
                out["failures"].append(("h_prime", mm))
        # and h'_m for k < m <= n acts by zero from the left
        for mm in range(k + 1, n + 1):
            acc = {}
            for (lam, a), c in gm.h_prime_unreduced(mm).items():
                for x, v in self.omega_image(lam, a).items():
                    _add(acc, x, c * v)
            if acc:
                out["kills_relations"] = False
                out["failures"].append(("h_prime_left", mm))
        if self.u(((), self.one)) != {((), self.one): 1}:
            out["unit"] = False
        for deg in range(0, bound + 1, 2):
            src = gk.basis(deg)
            tgt = gm.basis(deg)
            pos = {x: i for i, x in enumerate(tgt)}
            rows = []
            try:
                for key in src:
                    rows.append({pos[x]: v for x, v in self.u(key).items()})
            except (NotInSpan, ArithmeticError, KeyError):
                out["bijective"] = False
                out["failures"].append(("u_span", deg))
                continue
            if not _is_unimodular(rows, len(tgt)):
                out["bijective"] = False
                out["failures"].append(("u_unimodular", deg, len(src), len(tgt)))
        gens = [((j,), self.one) for j in range(1, n - k + 1) if k] + [((), a) for a in _a_generators(n)]
        for x in gens:
            for y in gens:
                if gk.key_degree(x) + gk.key_degree(y) > bound:
                    continue
                lhs: dict = {}
                for key, v in gk.mul({x: 1}, {y: 1}).items():
                    for t, w in self.u(key).items():
                        _add(lhs, t, v * w)
                rhs = gm.mul(self.u(x), self.u(y))
                if lhs != rhs:
                    out["multiplicative"] = False
                    out["failures"].append(("mult", x, y))
        return out


def _a_generators(n: int) -> list[AMono]:
    r = n // 2
    gens = [((0,) * r, 1)] if n else []
    for j in range(r):
        beta = [0] * r
        beta[j] = 1
        gens.append((tuple(beta), 0))
    return gens


@lru_cache(maxsize=None)
def top_cohomology(n: int, k: int) -> TopCohomology:
    return TopCohomology(n, k)
