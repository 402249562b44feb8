import pytest
from hypothesis import given
from hypothesis import strategies as st

from oddcat.oddsym import (
    Partition,
    complete,
    e_relations,
    elem_complete_check,
    elementary,
    h_product,
    is_odd_symmetric,
    lr_coefficients,
    ol_coordinates,
    partitions,
    schubert,
    schur,
    straighten_h,
    transition_matrix,
)
from oddcat.skewpoly import Permutation, SkewPoly

from .strategies import skewpolys

x1, x2 = SkewPoly.var(1, 2), SkewPoly.var(2, 2)


def test_elementary_and_complete_small():
    assert elementary(1, 2) == x1 - x2
    assert elementary(0, 2) == SkewPoly.one(2)
    assert complete(2, 2) == x1 * x1 - x1 * x2 + x2 * x2


def test_elem_complete_small():
    assert elem_complete_check(1, 1)
    assert elem_complete_check(1, 2)
    assert elem_complete_check(2, 2)
    e1h1 = elementary(1, 2) * complete(1, 2)
    assert e1h1 == x1 * x1 + x2 * x2
    assert elementary(2, 2) == -(x1 * x2)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_e_relations(n):
    res = e_relations(n)
    assert all(r[3] for r in res)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_elem_complete_all_degrees(n):
    assert all(elem_complete_check(l, n) for l in range(1, 2 * n + 1))


def test_schur_small():
    assert schur((), 3) == SkewPoly.one(3)
    assert schur((1,), 2) == x1 - x2
    for k in range(4):
        f = schur((k,), 1)
        assert f in (SkewPoly.monomial((k,)), -SkewPoly.monomial((k,)))


def test_schubert_small():
    assert schubert(Permutation.longest(3)) == SkewPoly.monomial((2, 1, 0))
    assert schubert(Permutation.identity(2)) == SkewPoly.one(2)
    s1 = schubert(Permutation.simple(1, 3))
    assert s1.degree().z == 2
    assert s1.dd(1) in (schubert(Permutation.identity(3)), -schubert(Permutation.identity(3)))


def test_ol_coordinates_small():
    assert ol_coordinates(SkewPoly.var(1, 2)) == {Permutation.longest(2): SkewPoly.one(2)}
    c = ol_coordinates(elementary(1, 3))
    assert list(c) == [Permutation.identity(3)]


@given(skewpolys(3, max_part=3, max_terms=3))
def test_ol_coordinates_reconstruct(f):
    coords = ol_coordinates(f)
    total = SkewPoly.zero(3)
    for w, c in coords.items():
        assert is_odd_symmetric(c)
        total = total + schubert(w) * c
    assert total == f


def test_lr_small():
    assert lr_coefficients((), (2, 1), 3) == {Partition((2, 1)): 1}
    c = lr_coefficients((1,), (1,), 2)
    assert set(c) == {Partition((2,)), Partition((1, 1))}
    assert all(v % 2 for v in c.values())


@given(st.integers(0, 3), st.integers(0, 3))
def test_lr_respects_size(a, b):
    for mu in partitions(a, 3):
        for nu in partitions(b, 3):
            assert all(lam.size == a + b for lam in lr_coefficients(tuple(mu), tuple(nu), 3))


def test_straighten_h1_h2():
    assert straighten_h((2, 2)) == {(2, 2): 1}
    assert straighten_h((1, 2)) == {(2, 1): -1, (3,): 2}


@pytest.mark.parametrize("word", [(1, 2), (2, 3), (1, 3), (1, 1, 2)])
def test_straighten_by_evaluation(word):
    n = 5
    lhs = h_product(word, n)
    rhs = SkewPoly.zero(n)
    for w, c in straighten_h(word).items():
        rhs = rhs + h_product(w, n).scale(c)
    assert lhs == rhs


@given(st.integers(1, 4), st.integers(0, 3))
def test_generators_odd_symmetric(n, k):
    assert is_odd_symmetric(elementary(k, n))
    assert is_odd_symmetric(complete(k, n))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_schur_to_h_unitriangular(n):
    for total in range(9):
        for lam, row in transition_matrix(n, total, "schur", "h").items():
            assert row.get(lam) == 1
            assert all(tuple(mu) >= tuple(lam) for mu in row)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_schur_to_eps_triangular_signed(n):
    for total in range(9):
        for lam, row in transition_matrix(n, total, "schur", "eps").items():
            dual = lam.dual()
            assert abs(row.get(dual, 0)) == 1
            assert all(tuple(mu) >= tuple(dual) for mu in row)


def test_schur_to_eps_diagonal_not_always_plus_one():
    row = transition_matrix(2, 2, "schur", "eps")
    assert sorted(r[lam.dual()] for lam, r in row.items()) == [-1, 1]
