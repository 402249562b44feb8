"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from oddcat.oddnilhecke import NilHeckeElement
from oddcat.skewpoly import Permutation, SkewPoly


def exponents(n, max_part=3):
    return st.tuples(*[st.integers(0, max_part)] * n)


@st.composite
def skewpolys(draw, n, max_part=3, max_terms=4):
    terms = draw(st.dictionaries(exponents(n, max_part), st.integers(-3, 3).filter(bool), max_size=max_terms))
    return SkewPoly(n, terms)


@st.composite
def homogeneous_skewpolys(draw, n, max_total=5, max_terms=3):
    total = draw(st.integers(0, max_total))
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        cuts = sorted(draw(st.lists(st.integers(0, total), min_size=n - 1, max_size=n - 1)))
        e = tuple(b - a for a, b in zip([0] + cuts, cuts + [total]))
        terms[e] = draw(st.integers(-3, 3).filter(bool))
    return SkewPoly(n, terms)


@st.composite
def permutations(draw, n):
    return Permutation(draw(st.permutations(range(1, n + 1))))


@st.composite
def nilhecke_elements(draw, n, max_part=2, max_terms=3):
    out = NilHeckeElement.zero(n)
    for _ in range(draw(st.integers(0, max_terms))):
        w = draw(permutations(n))
        a = draw(exponents(n, max_part))
        c = draw(st.integers(-2, 2).filter(bool))
        out = out + NilHeckeElement(n, {(w.oneline, a): c})
    return out
