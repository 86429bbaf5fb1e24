from itertools import product

import pytest

from qfock.canonfock import lt_basis
from qfock.combinat import AffinePermutation, finite_permutations, partitions
from qfock.klpoly import (
    b_minus_via_kl,
    b_plus_via_kl,
    bruhat_leq,
    kl_mu,
    kl_polynomial,
    lower_interval,
    parabolic_kl,
)
from qfock.laurent import ONE, parse_laurent

P = parse_laurent


def _elements(l, max_len, power=0):
    """Elements of the extended affine group up to a given Coxeter length, by breadth-first search."""
    rot = AffinePermutation.rotation(l, power)
    seen = {AffinePermutation.identity(l)}
    layer = set(seen)
    for _ in range(max_len):
        layer = {w.times_simple(j) for w in layer for j in range(l)} - seen
        seen |= layer
    return [w * rot for w in seen if w.length() <= max_len]


def _subword_interval(x):
    """Everything below x: products of subwords of one reduced word (subword property)."""
    p, word = x.reduced_word()
    rot = AffinePermutation.rotation(x.l, p)
    out = set()
    for mask in product((0, 1), repeat=len(word)):
        w = AffinePermutation.identity(x.l)
        for keep, j in zip(mask, word):
            if keep:
                w = w.times_simple(j)
        out.add(w * rot)
    return out


@pytest.mark.parametrize("l, max_len, power", [(2, 5, 0), (2, 4, 1), (3, 4, 0), (3, 3, 2)])
def test_bruhat_matches_subword_property(l, max_len, power):
    for x in _elements(l, max_len, power):
        assert set(lower_interval(x)) == _subword_interval(x)


def test_bruhat_examples():
    e, s0, s1 = AffinePermutation.identity(2), AffinePermutation.simple(0, 2), AffinePermutation.simple(1, 2)
    assert bruhat_leq(e, s0) and bruhat_leq(s1, s1)
    assert not bruhat_leq(s0, s1) and not bruhat_leq(s1, s0)


def test_kl_trivial_cases():
    for x in _elements(3, 3):
        assert kl_polynomial(x, x) == ONE


def test_affine_a1_polynomials_are_one():
    for x in _elements(2, 6):
        for y in lower_interval(x):
            assert kl_polynomial(y, x) == ONE


def test_s3_inside_l3_polynomials_are_one():
    for x in finite_permutations(3):
        for y in lower_interval(x):
            assert kl_polynomial(y, x) == ONE


def test_singular_schubert_varieties_in_s4():
    # the two singular Schubert varieties of GL_4/B: P_{e,3412} = P_{e,4231} = 1 + q
    # (polynomials in q are stored with q in the place of v)
    e = AffinePermutation.identity(4)
    for window in [(3, 4, 1, 2), (4, 2, 3, 1)]:
        assert kl_polynomial(e, AffinePermutation(window)) == P("1 + v")
    assert kl_polynomial(AffinePermutation((1, 3, 2, 4)), AffinePermutation((3, 4, 1, 2))) == P("1 + v")


def test_s4_polynomial_census():
    # every KL polynomial of S_4 is 1 or 1 + q
    for x in finite_permutations(4):
        for y in lower_interval(x):
            assert kl_polynomial(y, x) in (ONE, P("1 + v"))


def test_degree_bound_and_mu():
    for x in _elements(3, 4):
        for y in lower_interval(x):
            p = kl_polynomial(y, x)
            if y != x:
                assert 2 * p.max_degree <= x.length() - y.length() - 1
            assert p.coeff(0) == 1
            assert kl_mu(y, x) >= 0


def test_parabolic_kl_of_identity():
    i = (-1, 0)
    e = AffinePermutation.identity(2)
    assert parabolic_kl(i, e, e) == ONE


@pytest.mark.parametrize("lam", [(2,), (1, 1)])
def test_b_minus_weight_two(lam):
    table = lt_basis(2, 2, "-", 2)
    assert b_minus_via_kl(lam, 2, 2) == table.columns[lam]


def test_minimal_partition_gives_basis_vector():
    assert b_minus_via_kl((), 2, 2) == {(): ONE}
    assert b_plus_via_kl((), 2, 2) == {(): ONE}


@pytest.mark.parametrize("n, l", [(2, 2), (3, 2), (2, 3)])
def test_kl_formulas_match_lt_algorithm(n, l):
    for w in range(5):
        minus = lt_basis(w, n, "-", l)
        plus = lt_basis(w, n, "+", l)
        for lam in partitions(w, None, l):
            assert b_minus_via_kl(lam, n, l) == minus.columns[lam]
            assert b_plus_via_kl(lam, n, l) == plus.columns[lam]


def test_rejects_long_partitions():
    with pytest.raises(ValueError):
        b_minus_via_kl((1, 1, 1), 2, 2)
