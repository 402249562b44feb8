"""Graded dimensions of idempotent truncations e M and M e.

For the idempotents e_m = τ_{w0} x_{[1,m]} and e'_m = x'_{[1,m]} τ_{w0} of
ONH_m the predicted series are ``q^{±C(m,2)} grdim(M) / [m]!``. They are
compared with direct ranks of the truncated spanning sets; to stay inside
polynomials we check ``[m]! · direct = q^{±C(m,2)} · grdim(M)`` up to a bound,
at pi = 1.
"""

from __future__ import annotations

from math import comb

from ..grading import GradedScalar, GradedSeries, qfactorial
from ..linalg import rank
from ..oddnilhecke import IntervalData, NilHeckeElement
from ..skewpoly import Permutation, SkewPoly, monomials

# (side, idempotent) -> sign of the C(m,2) shift
SHIFTS = {("left", "e_prime"): 1, ("left", "e"): -1, ("right", "e"): 1, ("right", "e_prime"): -1}


def idempotent(kind: str, m: int) -> NilHeckeElement:
    data = IntervalData(1, m, m)
    return data.e if kind == "e" else data.e_prime


def grdim_idempotent_truncation(grdim_m: GradedSeries, side: str, kind: str, m: int) -> GradedSeries:
    """``[m]!`` times the predicted grdim of e M (side='left') or M e (side='right')."""
    sign = SHIFTS[(side, kind)]
    return grdim_m * GradedScalar.q(sign * comb(m, 2))


def _pbw(m: int, degree: int) -> list[NilHeckeElement]:
    out = []
    for w in Permutation.all(m):
        t2 = degree + 2 * w.length()
        if t2 < 0 or t2 % 2:
            continue
        for a in monomials(m, t2 // 2):
            out.append(NilHeckeElement(m, {(w.oneline, a): 1}, _trusted=True))
    return out


def direct_counts(module: str, side: str, kind: str, m: int, lo: int, hi: int) -> GradedScalar:
    """Ranks of the truncation in degrees lo..hi; parity is degree/2 mod 2 throughout."""
    e = idempotent(kind, m)
    acc: dict[tuple[int, int], int] = {}
    for deg in range(lo - lo % 2, hi + 1, 2):
        if module == "opol":
            vecs = [e.act(SkewPoly.monomial(a)).terms for a in monomials(m, deg // 2)] if deg >= 0 else []
        else:
            vecs = [((e * x) if side == "left" else (x * e)).terms for x in _pbw(m, deg)]
        r = rank(vecs)
        if r:
            acc[(deg, (deg // 2) % 2)] = r
    return GradedScalar(acc)


def module_grdim(module: str, m: int) -> GradedSeries:
    if module == "opol":
        return GradedSeries(1, [1] * m)
    return GradedSeries(GradedScalar.q(-comb(m, 2)) * qfactorial(m), [1] * m)


def check_truncation_formula(module: str, side: str, kind: str, m: int, bound: int) -> tuple[bool, dict, dict]:
    """Compare both sides of ``[m]! · grdim(trunc) = q^{±C(m,2)} grdim(M)`` in degrees <= bound."""
    if module == "opol" and side == "right":
        raise ValueError("OPol_m is only a left module")
    lo = 0 if module == "opol" else -m * (m - 1)
    c = comb(m, 2)
    direct = direct_counts(module, side, kind, m, lo, bound + c)
    lhs = direct * qfactorial(m)
    rhs = grdim_idempotent_truncation(module_grdim(module, m), side, kind, m).expand(bound)
    # the series type has even denominators only, so parity is dropped (pi = 1)
    left = {d: c for d, c in lhs.specialize(1).items() if d <= bound}
    right = {d: c for d, c in rhs.specialize(1).items() if d <= bound}
    return left == right, left, right
