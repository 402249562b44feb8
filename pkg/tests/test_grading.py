from hypothesis import given
from hypothesis import strategies as st

from oddcat.grading import GradedScalar, GradedSeries, qbinomial, qbinomial_pascal, qfactorial, qint

q, pi = GradedScalar.q, GradedScalar.pi


def test_qint_small():
    assert qint(2) == q(1) + pi() * q(-1)
    assert qint(1) == GradedScalar.const(1)
    assert qint(0).is_zero()


def test_qint_minus_one():
    # clearing the denominator of (q^-1 - pi q)/(q - pi q^-1)
    assert qint(-1) == -pi()


def test_factorial_and_binomial_small():
    assert qfactorial(2) == q(1) + pi() * q(-1)
    assert qbinomial(2, 1) == q(1) + pi() * q(-1)
    assert qbinomial(5, 0) == GradedScalar.const(1)
    assert qbinomial(3, 4).is_zero()


def test_series_expansions():
    assert GradedSeries(1, [1]).expand(4) == GradedScalar.const(1) + q(2) + q(4)
    assert GradedSeries(1, [1, 1]).expand(2) == GradedScalar.const(1) + q(2) * 2
    assert GradedSeries(1, [1, 2]).expand(4) == GradedScalar.const(1) + q(2) + q(4) * 2


def test_pi_squared_is_one():
    assert pi() * pi() == GradedScalar.const(1)


def test_specialize_pi_one_gives_classical_integer():
    # at pi = 1 and q = 1 the (q,pi)-integer is n
    for n in range(1, 8):
        assert sum(qint(n).specialize(1).values()) == n


@given(st.integers(0, 9), st.integers(0, 9))
def test_binomial_factorial_identity(a, b):
    assert qbinomial(a + b, a) * qfactorial(a) * qfactorial(b) == qfactorial(a + b)


@given(st.integers(0, 10), st.integers(0, 10))
def test_binomial_matches_pascal(n, k):
    assert qbinomial(n, k) == qbinomial_pascal(n, k)


@given(st.integers(0, 8), st.integers(0, 8))
def test_binomial_symmetric(n, k):
    assert qbinomial(n, k) == qbinomial(n, n - k)


@given(st.integers(1, 8))
def test_qint_bar_invariance(n):
    # [n] is invariant under q -> pi q^-1
    t = qint(n).terms
    flipped = {(-e, (p + e) % 2): c for (e, p), c in t.items()}
    assert GradedScalar(flipped) == qint(n)
