"""Suite runners: each turns module checks into :class:`VerificationRecord` lists."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

from .cache import DiskCache, schur_expansions, warm_word_table
from .report import Recorder, VerificationRecord

SUITES = ("onh", "sym", "schur-lr", "deform", "matrix-iso", "gamma", "complex", "invertibility", "mod2", "grdim")

# n values per suite when --n is not given
DEFAULT_NS = {
    "onh": (1, 2, 3, 4),
    "sym": (1, 2, 3, 4, 5),
    "schur-lr": (3,),
    "deform": (1, 2, 3, 4),
    "matrix-iso": (1, 2, 3, 4),
    "gamma": (1, 2, 3, 4),
    "complex": (1, 2, 3, 4),
    "invertibility": (1, 2, 3, 4),
    "mod2": (1, 2, 3, 4),
    "grdim": (1, 2, 3, 4),
}

# PBW independence past this degree is too slow at n >= 4; counts still go to D
PBW_INDEPENDENCE_CAP = {4: 8}
# per-m degree bounds for the idempotent truncation counts
TRUNCATION_CAP = {1: 10, 2: 10, 3: 6, 4: 2}


@dataclass
class Config:
    n: int | None = None
    k: int | None = None
    degree_bound: int | None = None
    specialize: str | None = None
    cache: DiskCache | None = None
    samples: int = 100

    def ns(self, suite: str) -> tuple[int, ...]:
        return (self.n,) if self.n is not None else DEFAULT_NS[suite]

    def ks(self, lo: int, hi: int) -> list[int]:
        if self.k is not None:
            return [self.k] if lo <= self.k <= hi else []
        return list(range(lo, hi + 1))

    def bound(self, default: int) -> int:
        return self.degree_bound if self.degree_bound is not None else default


def default_bound(n: int) -> int:
    return 2 * n * n + 8


def _failures(d: dict) -> list:
    return sorted((k for k, v in d.items() if not v), key=repr)


# ---------------------------------------------------------------- onh

def run_onh(cfg: Config) -> list[VerificationRecord]:
    from .grading import GradedScalar, GradedSeries, qfactorial
    from .oddnilhecke import check_relations, pbw_independent
    from .skewpoly import Permutation

    rec = Recorder("onh")
    sec = "Odd nilHecke algebra"
    for n in cfg.ns("onh"):
        D = cfg.bound(default_bound(n))
        warm_word_table(cfg.cache, n)

        def relations():
            bad = _failures(check_relations(n, D))
            return not bad, {"failing": bad}

        rec.run(sec, "relations", "defining relations hold under the polynomial action", {"n": n, "D": D}, relations)

        lo = -n * (n - 1)

        def counts():
            got: dict[int, int] = {}
            for w in Permutation.all(n):
                for deg in range(lo, D + 1, 2):
                    t2 = deg + 2 * w.length()
                    if t2 >= 0:
                        got[deg] = got.get(deg, 0) + comb(t2 // 2 + n - 1, n - 1)
            series = GradedSeries(GradedScalar.q(-comb(n, 2)) * qfactorial(n), [1] * n)
            want = {d: c for d, c in series.expand(D).specialize(1).items() if d <= D}
            got = {d: c for d, c in got.items() if c}
            return got == want, {"degrees": [lo, D], "total": sum(got.values())}

        rec.run(sec, "pbw-count", "PBW monomial counts equal the graded dimension formula (pi = 1)", {"n": n, "D": D}, counts)

        top = min(D, PBW_INDEPENDENCE_CAP.get(n, D))

        def independent():
            bad = [d for d in range(lo, top + 1, 2) if not pbw_independent(n, d)]
            return not bad, {"degrees": [lo, top], "dependent_degrees": bad}

        rec.run(sec, "pbw-independent", "PBW monomials act independently on the polynomial ring", {"n": n, "D": top}, independent)
    return rec.records


# ---------------------------------------------------------------- sym

def run_sym(cfg: Config) -> list[VerificationRecord]:
    from .oddsym import elem_complete_check, e_relations

    rec = Recorder("sym")
    sec = "Odd symmetric functions"
    for n in cfg.ns("sym"):
        def erel():
            res = e_relations(n)
            return all(r[3] for r in res), {"checked": len(res), "failing": [r[:3] for r in res if not r[3]]}

        rec.run(sec, "e-relations", "relations among odd elementary functions", {"n": n}, erel)

        def elemcomp():
            bad = [l for l in range(1, 2 * n + 1) if not elem_complete_check(l, n)]
            return not bad, {"degrees": [1, 2 * n], "failing": bad}

        rec.run(sec, "elem-complete", "alternating elementary/complete convolution vanishes", {"n": n}, elemcomp)

        D = cfg.bound(16)
        total = D // 2

        def h_side():
            mats = schur_expansions(cfg.cache, n, total, "h")
            bad = []
            for t, m in mats.items():
                for lam, row in m.items():
                    if row.get(lam) != 1 or any(tuple(mu) < tuple(lam) for mu in row):
                        bad.append((t, tuple(lam)))
            return not bad, {"sizes": [0, total], "failing": bad}

        rec.run(sec, "schur-h", "Schur to complete transition is unitriangular", {"n": n, "D": D}, h_side)

        def eps_side():
            mats = schur_expansions(cfg.cache, n, total, "eps")
            bad, minus = [], 0
            for t, m in mats.items():
                for lam, row in m.items():
                    dl = tuple(lam.dual())
                    diag = row.get(lam.dual(), 0)
                    minus += diag == -1
                    if abs(diag) != 1 or any(tuple(mu) < dl for mu in row):
                        bad.append((t, tuple(lam)))
            return not bad, {"sizes": [0, total], "negative_diagonal": minus, "failing": bad}

        rec.run(sec, "schur-eps", "Schur to elementary transition is triangular with diagonal +-1", {"n": n, "D": D}, eps_side)
    return rec.records


# ---------------------------------------------------------------- schur-lr

def run_schur_lr(cfg: Config) -> list[VerificationRecord]:
    from .evenoracle import even_lr
    from .oddsym import lr_coefficients, partitions

    rec = Recorder("schur-lr")
    sec = "Littlewood-Richardson mod 2"
    for nv in cfg.ns("schur-lr"):
        D = cfg.bound(12)
        for s in range(D // 2 + 1):
            def one_size(s=s):
                bad, pairs = [], 0
                for a in range(s + 1):
                    for mu in partitions(a, nv):
                        for nu in partitions(s - a, nv):
                            pairs += 1
                            odd = {tuple(k): v for k, v in lr_coefficients(tuple(mu), tuple(nu), nv).items()}
                            ev = even_lr(mu, nu, nv)
                            if any((odd.get(x, 0) - ev.get(x, 0)) % 2 for x in set(odd) | set(ev)):
                                bad.append((tuple(mu), tuple(nu)))
                return not bad, {"pairs": pairs, "failing": bad}

            rec.run(sec, f"lr-size-{s}", "odd LR coefficients reduce mod 2 to tableau counts", {"n": nv, "m": s}, one_size)
    return rec.records


# ---------------------------------------------------------------- deform

def run_deform(cfg: Config) -> list[VerificationRecord]:
    from .crcomplex.terms import count_matches_formula, mod2_certificate, term_space
    from .deform.an import a_poly_relations
    from .deform.cyclotomic import check_certificate, recursion_matches_powers

    rec = Recorder("deform")
    sec = "Deformed cyclotomic quotients"
    for n in cfg.ns("deform"):
        D = cfg.bound(default_bound(n))

        def fruit(k=n):
            bad = [m for m in range(0, 9) if not recursion_matches_powers(k, m)]
            return not bad, {"powers": [0, 8], "failing": bad}

        rec.run(sec, "matrix-recursion", "closed recursion for the entries of X^m", {"k": n, "m": 8}, fruit)

        def apoly():
            a, b = a_poly_relations(n)
            return a and b, {"left": a, "right": b}

        rec.run(sec, "a-commutation", "t commutes past a(t) up to the 2d shift", {"n": n}, apoly)

        for k in cfg.ks(1, n):
            def certs(k=k):
                bad, used = [], 0
                for i in range(1, k + 1):
                    for j in range(1, k + 1):
                        ok, c = check_certificate(k, n, i, j)
                        used += c
                        if not ok:
                            bad.append((i, j))
                return not bad, {"entries": k * k, "generator_terms": used, "failing": bad}

            rec.run(sec, "ideal-certificate", "entries of a^n(X) lie in the ideal of h' generators", {"n": n, "k": k}, certs)

        for m in cfg.ks(1, n):
            for l in range(1, m + 2):
                for kk in range(1, m + 2):
                    sp = term_space(n, m, l, kk)
                    params = {"n": n, "m": m, "l": l, "k": kk, "D": D}
                    name = "quotient-basis" if l == kk == m + 1 else "truncated-basis"

                    def indep(sp=sp):
                        ok, r, size = mod2_certificate(sp)
                        return ok, {"rank_mod2": r, "labels": size}

                    def span(sp=sp, D=D):
                        ok, got, want = count_matches_formula(sp, D)
                        return ok, {"total": sum(got.values()), "mismatch": sorted(set(got.items()) ^ set(want.items()))}

                    rec.run(sec, f"{name}-independent", "stated basis is A_n-independent (mod-2 certificate)", params, indep)
                    rec.run(sec, f"{name}-count", "graded count equals the closed grdim formula", params, span)
    return rec.records


# ---------------------------------------------------------------- matrix-iso

def run_matrix_iso(cfg: Config) -> list[VerificationRecord]:
    from .deform.cyclotomic import c_entries_vanish_in_mkn
    from .deform.onhkn import cyclotomic_model

    rec = Recorder("matrix-iso")
    sec = "Matrix presentation"
    for n in cfg.ns("matrix-iso"):
        for m in cfg.ks(1, n):
            rec.run(sec, "a-vanishes", "a^n(x_1) acts by zero on the matrix model", {"n": n, "m": m},
                    lambda m=m: (cyclotomic_model(m, n).a_of_x1_vanishes(), None))
            rec.run(sec, "c-entries-vanish", "entries of a^n(X) vanish in M_k^n", {"n": n, "k": m},
                    lambda m=m: (c_entries_vanish_in_mkn(m, n), None))
    return rec.records


# ---------------------------------------------------------------- gamma

def run_gamma(cfg: Config) -> list[VerificationRecord]:
    from .deform.gamma import gamma_iso

    rec = Recorder("gamma")
    sec = "Grassmannian duality"
    for n in cfg.ns("gamma"):
        D = cfg.bound(16)
        for k in cfg.ks(0, n):
            G = gamma_iso(k, n)
            p = {"n": n, "k": k, "D": D}

            def rels(side):
                res = G.relations_in_source() if side == "source" else G.relations_in_target()
                return all(r[3] for r in res), {"checked": len(res), "failing": [r[:3] for r in res if not r[3]]}

            rec.run(sec, "h-prime-relations", "h' presentation relations hold in M_k^n", p, lambda: rels("source"))
            rec.run(sec, "image-relations", "images of h' generators satisfy the presentation", p, lambda: rels("target"))
            rec.run(sec, "kills-high", "generators above n-k map to zero", p, lambda: (G.kills_high_generators(), None))

            def unip():
                bad = [d for d in range(0, D + 1, 2) if not G.unipotent(d)]
                return not bad, {"failing_degrees": bad}

            def bij():
                bad = [d for d in range(0, D + 1, 2) if not G.bijective(d)]
                return not bad, {"failing_degrees": bad}

            rec.run(sec, "h-prime-basis", "h' monomials in the box form a Z-basis", p, unip)
            rec.run(sec, "bijective", "gamma is a degreewise bijection", p, bij)
    return rec.records


# ---------------------------------------------------------------- complex

def run_complex(cfg: Config) -> list[VerificationRecord]:
    from .crcomplex.complex import check_exactness, complex_for

    rec = Recorder("complex")
    sec = "Complexes"
    for n in cfg.ns("complex"):
        D = cfg.bound(default_bound(n))
        for k in cfg.ks(0, n):
            p = {"n": n, "k": k, "D": D}
            state: dict = {}

            def deg_z():
                rep = check_exactness(n, k, D, cfg.specialize)
                state["a"] = rep.exact and rep.d_squared_zero
                return rep.d_squared_zero and rep.exact and rep.closed_form, {
                    "specialize": cfg.specialize or "none",
                    "d_squared_zero": rep.d_squared_zero,
                    "closed_form": rep.closed_form,
                    "top_rank_total": sum(rep.top_rank.values()),
                    "failures": rep.failures[:5],
                }

            def snf():
                rep = check_exactness(n, k, D, "undeformed")
                state["b"] = rep.exact and rep.d_squared_zero
                return state["b"], {"top_rank_total": sum(rep.top_rank.values()), "failures": rep.failures[:5]}

            def combinatorial():
                cx = complex_for(n, k)
                bad = []
                if cx.kernel_labels(cx.rs[0]):
                    bad.append(("first_not_injective", cx.rs[0]))
                for r in cx.rs[:-1]:
                    im = cx.image_labels(r)
                    if len(im) != len(set(im)):
                        bad.append(("image_repeats", r))
                    if set(im) != cx.stated_image_labels(r):
                        bad.append(("image_set", r))
                    if r + 1 < cx.rs[-1] and set(im) != cx.kernel_labels(r + 1):
                        bad.append(("ker_ne_im", r + 1))
                state["c"] = not bad
                return not bad, {"failing": bad}

            rec.run(sec, "exact-z", "d^2 = 0 and exactness below the top, degreewise over Z", p, deg_z)
            rec.run(sec, "exact-undeformed-snf", "undeformed specialization: Smith forms give exactness", p, snf)
            rec.run(sec, "exact-combinatorial", "combinatorial kernel and image labels match", p, combinatorial)
            rec.run(sec, "certificates-agree", "all three exactness certificates agree", p,
                    lambda: (state["a"] == state["b"] == state["c"], dict(sorted(state.items()))))
    return rec.records


# ---------------------------------------------------------------- invertibility

def run_invertibility(cfg: Config) -> list[VerificationRecord]:
    from .crcomplex.top import top_cohomology
    from .deform.grassmannian import grassmannian
    from .evenoracle import box_images_independent, even_grassmannian

    rec = Recorder("invertibility")
    sec = "Top cohomology and invertibility"
    for n in cfg.ns("invertibility"):
        D = cfg.bound(16)
        for k in cfg.ks(0, n):
            T = top_cohomology(n, k)
            p = {"n": n, "k": k, "D": D}
            rec.run(sec, "stated-basis", "stated generators are +- the quotient basis", p,
                    lambda: (lambda r: (r[0], {"failing": r[1][:5]}))(T.check_stated_basis()))
            rec.run(sec, "truncation", "e' C e is spanned by the g_a", p,
                    lambda: (lambda r: (r[0], {"failing": r[1][:5]}))(T.check_truncation(D)))
            rec.run(sec, "omega-basis", "Omega sends the box basis to a Z-basis", p,
                    lambda: (lambda r: (r[0], {"failing": r[1][:5]}))(T.check_omega(D)))
            rec.run(sec, "omega-schur", "Omega(s_lambda) = +- g_a", p, lambda: (T.omega_schur_signed(), None))

            def u_checks():
                r = T.check_u(D)
                ok = all(r[x] for x in ("kills_relations", "unit", "bijective", "multiplicative"))
                return ok, {x: r[x] for x in sorted(r) if x != "failures"} | {"failures": r["failures"][:5]}

            rec.run(sec, "u-bijective", "u is well defined, multiplicative and degreewise bijective", p, u_checks)

            def square():
                eg2 = even_grassmannian(n - k, n)
                g = grassmannian(k, n)
                indep = [d for d in range(0, D + 1, 2) if not box_images_independent(k, n, d)[0]]
                bad = []
                for deg in range(0, D + 1, 2):
                    for key in g.basis(deg):
                        if eg2.from_box(T.u(key)) != eg2.nf(eg2.omega0({key: 1})):
                            bad.append(key)
                return not bad and not indep, {"non_iso_degrees": indep, "failing": bad[:5]}

            rec.run(sec, "mod2-square", "mod-2 reduction of u matches the classical duality", p, square)
    return rec.records


# ---------------------------------------------------------------- mod2

def run_mod2(cfg: Config) -> list[VerificationRecord]:
    from .evenoracle import bridge_generators, bridge_random

    rec = Recorder("mod2")
    sec = "Mod-2 reduction"
    for n in cfg.ns("mod2"):
        def gens():
            r = bridge_generators(n)
            return all(r.values()), dict(sorted(r.items()))

        def rand():
            r = bridge_random(n, cfg.samples)
            return all(r.values()), dict(sorted(r.items()))

        rec.run(sec, "generators", "reduction mod 2 on generators matches the even theory", {"n": n}, gens)
        rec.run(sec, "random", f"reduction mod 2 commutes with the operations ({cfg.samples} samples)", {"n": n, "m": cfg.samples}, rand)
    return rec.records


# ---------------------------------------------------------------- grdim

def run_grdim(cfg: Config) -> list[VerificationRecord]:
    from .crcomplex.truncation import check_truncation_formula
    from .grading import qbinomial, qbinomial_pascal, qfactorial

    rec = Recorder("grdim")
    sec = "Graded dimensions"
    D = cfg.bound(16)
    top = D // 2

    def binom():
        bad = []
        for s in range(top + 1):
            for a in range(s + 1):
                b = s - a
                if qbinomial(s, a) != qbinomial_pascal(s, a):
                    bad.append(("pascal", a, b))
                if qbinomial(s, a) * qfactorial(a) * qfactorial(b) != qfactorial(s):
                    bad.append(("factorial", a, b))
        return not bad, {"a_plus_b": [0, top], "failing": bad}

    rec.run(sec, "qbinomial", "[a+b choose a][a]![b]! = [a+b]! and Pascal recursion", {"D": D}, binom)
    cases = [("opol", "left", "e"), ("opol", "left", "e_prime"), ("onh", "left", "e"),
             ("onh", "left", "e_prime"), ("onh", "right", "e"), ("onh", "right", "e_prime")]
    for m in cfg.ns("grdim"):
        bound = min(D, TRUNCATION_CAP.get(m, D))
        for module, side, kind in cases:
            def trunc(module=module, side=side, kind=kind, m=m, bound=bound):
                ok, l, r = check_truncation_formula(module, side, kind, m, bound)
                return ok, {"module": module, "side": side, "idempotent": kind,
                            "mismatch": sorted(set(l.items()) ^ set(r.items()))}

            rec.run(sec, f"truncation-{module}-{side}-{kind}", "idempotent truncation grdim formula", {"m": m, "D": bound}, trunc)
    return rec.records


RUNNERS: dict[str, Callable[[Config], list[VerificationRecord]]] = {
    "onh": run_onh,
    "sym": run_sym,
    "schur-lr": run_schur_lr,
    "deform": run_deform,
    "matrix-iso": run_matrix_iso,
    "gamma": run_gamma,
    "complex": run_complex,
    "invertibility": run_invertibility,
    "mod2": run_mod2,
    "grdim": run_grdim,
}


def run(suite: str, cfg: Config) -> list[VerificationRecord]:
    if suite == "all":
        out: list[VerificationRecord] = []
        for name in SUITES:
            out += RUNNERS[name](cfg)
        return out
    if suite not in RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    return RUNNERS[suite](cfg)
