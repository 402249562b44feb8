from math import comb

import pytest

from oddcat.crcomplex.complex import (
    check_exactness,
    closed_form_target,
    complex_for,
    stair_exact,
    staircase,
)
from oddcat.crcomplex.terms import count_matches_formula, mod2_certificate, term_grdim_formula, term_space
from oddcat.crcomplex.top import top_cohomology
from oddcat.crcomplex.truncation import check_truncation_formula, grdim_idempotent_truncation, module_grdim
from oddcat.grading import GradedScalar, qfactorial

# ---------------------------------------------------------------- shape


def test_term_counts():
    assert complex_for(1, 0).rs == [1]
    assert complex_for(2, 1).rs == [1, 2]
    for n in range(1, 5):
        assert complex_for(n, n).rs == [n]


def test_n2_k1_differential():
    cx = complex_for(2, 1)
    one = ((0,), 0)
    assert cx.d(1, ((0,), (1,))) == {((0, 0), (1, 2)): {one: 1}}
    assert cx.d(1, ((1,), (1,))) == {((1, 0), (1, 2)): {one: 1}}


def test_staircase_helpers():
    assert staircase((2, 1, 0), 1) == 2
    assert staircase((0, 1, 0), 1) == 1
    assert staircase((1, 0, 0), 1) == 0
    assert staircase((1, 0, 1), 1) is None
    assert stair_exact((3, 1, 0), 1) == 1
    assert stair_exact((2, 1, 0), 1) == 2


def test_positive_tail_moves_unchanged():
    assert closed_form_target(((1, 2), (2, 1)), 1, 3) == ((1, 2, 0), (2, 1, 3))


# ---------------------------------------------------------------- exactness

@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 4) for k in range(n + 1)])
def test_exact_over_z(n, k):
    rep = check_exactness(n, k, 2 * n * n + 8)
    assert rep.d_squared_zero and rep.exact and rep.closed_form, rep.failures[:3]


def test_n2_k1_exact_to_16():
    rep = check_exactness(2, 1, 16)
    assert rep.exact and rep.d_squared_zero


@pytest.mark.parametrize("k", range(4))
def test_undeformed_n3_smith(k):
    rep = check_exactness(3, k, 26, "undeformed")
    assert rep.exact and rep.d_squared_zero


@pytest.mark.parametrize("k", range(5))
def test_n4_closed_form_and_combinatorics(k):
    cx = complex_for(4, k)
    for r in cx.rs[:-1]:
        assert cx.closed_form_agrees(r)[0]
        im = cx.image_labels(r)
        assert len(im) == len(set(im))
        assert set(im) == cx.stated_image_labels(r)
        if r + 1 < cx.rs[-1]:
            assert set(im) == cx.kernel_labels(r + 1)
    assert not cx.kernel_labels(cx.rs[0])


def test_stated_kernel_rule_differs_only_without_right_idempotent():
    # the literal vanishing test over-predicts kernels on the first term when k >= n/2
    bad = []
    for n in range(1, 5):
        for k in range(n + 1):
            cx = complex_for(n, k)
            for r in cx.rs[:-1]:
                if cx.kernel_labels(r) != cx.stated_kernel_labels(r):
                    bad.append((n, k, r))
    assert bad == [(3, 2, 2), (4, 3, 3)]


# ---------------------------------------------------------------- terms

def test_term_formula_onh22():
    q, pi = GradedScalar.q, GradedScalar.pi
    assert term_grdim_formula(2, 2, 3, 3) == q(2) + pi() * 2 + q(-2)


@pytest.mark.parametrize("n,m,l,k", [(2, 2, 3, 3), (2, 1, 1, 1), (3, 2, 2, 2), (3, 3, 2, 3)])
def test_term_bases(n, m, l, k):
    sp = term_space(n, m, l, k)
    assert mod2_certificate(sp)[0]
    assert count_matches_formula(sp, 2 * n * n + 8)[0]


@pytest.mark.parametrize("n,m,l,k", [(3, 3, 2, 3), (4, 3, 2, 2)])
def test_term_formula_shift(n, m, l, k):
    # exponent bookkeeping: C(m-k+1,2) + C(m-l+1,2) + m(n-m) over the factorial ratio
    L, K = m - l + 1, m - k + 1
    ratio = qfactorial(m) * qfactorial(n)
    den = qfactorial(n - m) * qfactorial(L) * qfactorial(K)
    want = GradedScalar.q(comb(L, 2) + comb(K, 2) + m * (n - m)) * ratio.exact_div(den)
    assert term_grdim_formula(n, m, l, k) == want


# ---------------------------------------------------------------- idempotent truncation

def test_truncation_m1_is_identity_factor():
    g = module_grdim("onh", 1)
    assert grdim_idempotent_truncation(g, "left", "e", 1).expand(6) == g.expand(6)


@pytest.mark.parametrize("module,side,kind", [
    ("opol", "left", "e"), ("opol", "left", "e_prime"), ("onh", "left", "e"),
    ("onh", "left", "e_prime"), ("onh", "right", "e"), ("onh", "right", "e_prime"),
])
@pytest.mark.parametrize("m", [1, 2])
def test_truncation_formula(module, side, kind, m):
    assert check_truncation_formula(module, side, kind, m, 10)[0]


def test_opol_has_no_right_truncation():
    with pytest.raises(ValueError):
        check_truncation_formula("opol", "right", "e", 2, 4)


# ---------------------------------------------------------------- top cohomology

@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 4) for k in range(n + 1)])
def test_top_cohomology(n, k):
    T = top_cohomology(n, k)
    assert T.check_stated_basis()[0]
    assert T.check_truncation(12)[0]
    assert T.check_omega(12)[0]
    assert T.omega_schur_signed()
    r = T.check_u(12)
    assert r["kills_relations"] and r["unit"] and r["bijective"] and r["multiplicative"], r["failures"]
