import pytest
from hypothesis import given
from hypothesis import strategies as st

from oddcat.oddnilhecke import (
    IntervalData,
    NilHeckeElement,
    SignedWordTable,
    check_relations,
    idempotent_e,
    pbw_independent,
    word_table,
)
from oddcat.skewpoly import Permutation, SkewPoly

from .strategies import nilhecke_elements, skewpolys

one2 = NilHeckeElement.one(2)
t1 = NilHeckeElement.tau(1, 2)
X1, X2 = NilHeckeElement.x(1, 2), NilHeckeElement.x(2, 2)


def T(i, n=3):
    return NilHeckeElement.tau(i, n)


def test_defining_relations_small():
    assert t1 * X1 == one2 - X2 * t1
    assert (t1 * t1).is_zero()
    assert T(1) * T(2) * T(1) == T(2) * T(1) * T(2)


def test_length_additive_product_is_signed_tau():
    u, v = Permutation.simple(1, 3), Permutation.simple(2, 3)
    prod = NilHeckeElement.tau_perm(u) * NilHeckeElement.tau_perm(v)
    assert prod in (NilHeckeElement.tau_perm(u * v), -NilHeckeElement.tau_perm(u * v))


def test_e2_idempotent():
    e2 = X1 * t1
    assert e2 * e2 == e2
    assert idempotent_e(2) == e2


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_e_n_idempotent(n):
    e = idempotent_e(n)
    assert e * e == e


def test_e1_is_one():
    assert idempotent_e(1) == NilHeckeElement.one(1)


def test_action_values():
    assert t1.act(SkewPoly.var(1, 2)) == SkewPoly.one(2)
    f = SkewPoly.monomial((2, 1))
    assert one2.act(f) == f


def test_e2_projects():
    # e_2 fixes x_1 and kills 1 over OL_2
    e2 = idempotent_e(2)
    assert e2.act(SkewPoly.var(1, 2)) == SkewPoly.var(1, 2)
    assert e2.act(SkewPoly.one(2)).is_zero()


def test_interval_trivial_is_one():
    d = IntervalData(2, 2, 3)
    assert d.e == NilHeckeElement.one(3)


def test_interval_absorption():
    big, small = IntervalData(1, 3, 3), IntervalData(2, 3, 3)
    assert big.e * big.e == big.e
    assert big.e_prime * big.e_prime == big.e_prime
    assert small.e * big.e == big.e or big.e * small.e == big.e


def test_signed_word_table_w0_n3():
    tab = SignedWordTable(3)
    w0 = Permutation.longest(3)
    words = tab.table(w0)
    assert set(words) == {(1, 2, 1), (2, 1, 2)}
    assert set(words.values()) == {1}
    assert tab.sign((1, 1)) == 0


def test_signed_word_table_distant_commutation_sign():
    tab = SignedWordTable(4)
    assert tab.sign((1, 3)) == -tab.sign((3, 1))


@pytest.mark.parametrize("n", [2, 3])
def test_relations_hold_on_monomials(n):
    assert all(check_relations(n, 2 * n * n + 8).values())


@pytest.mark.parametrize("n,degree", [(2, -2), (2, 4), (3, -6), (3, 0), (3, 4)])
def test_pbw_independent(n, degree):
    assert pbw_independent(n, degree)


@given(nilhecke_elements(3), nilhecke_elements(3), nilhecke_elements(3))
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(nilhecke_elements(3), nilhecke_elements(3), skewpolys(3, max_part=2))
def test_action_is_module_action(a, b, f):
    assert (a * b).act(f) == a.act(b.act(f))


@given(skewpolys(3, max_part=2), st.sampled_from([(1,), (2,), (1, 2), (2, 1), (1, 2, 1)]))
def test_tau_word_acts_as_dd_word(f, word):
    op = NilHeckeElement.tau_word(word, 3)
    assert op.act(f) == f.dd_word(word)


def test_table_is_shared_per_n():
    assert word_table(3) is word_table(3)
