import pytest
from hypothesis import given, strategies as st

from qfock.laurent import (
    ONE,
    ZERO,
    FitError,
    LaurentPolynomial,
    fit_polynomial_in_Q,
    parse_laurent,
    poly_in_Q_to_laurent,
    quantum_integer,
    vpow,
)

P = parse_laurent

polys = st.dictionaries(st.integers(-6, 6), st.integers(-20, 20), max_size=5).map(LaurentPolynomial)


@pytest.mark.parametrize("text, expected", [
    ("1", "1"),
    ("v - v^-1", "v^-1 - v"),
    ("v^2 + 3 + v^-1", "v^-2 + 3 + v"),
])
def test_bar_examples(text, expected):
    assert P(text).bar() == P(expected)


@pytest.mark.parametrize("text, value", [("v + v^-1", 2), ("0", 0), ("1 - v", 0)])
def test_eval_at_one(text, value):
    assert P(text).eval_at_one() == value


def test_fit_identity_and_constant():
    assert fit_polynomial_in_Q({2: 2, 3: 3, 5: 5}, 1) == [0, 1]
    assert fit_polynomial_in_Q({2: 1, 3: 1, 5: 1}, 0) == [1]


def test_fit_group_order_of_gl1():
    # |GL_1(F_Q)| = Q - 1, counted directly
    samples = {q: sum(1 for x in range(q) if x) for q in (2, 3, 5)}
    assert fit_polynomial_in_Q(samples, 1) == [-1, 1]
    assert poly_in_Q_to_laurent([-1, 1]) == P("v^2 - 1")


def test_fit_rejects_bad_counts():
    with pytest.raises(FitError):
        fit_polynomial_in_Q({2: 1, 3: 2, 5: 7}, 1)
    with pytest.raises(FitError):
        fit_polynomial_in_Q({2: 1, 3: 2}, 1)


def test_quantum_integers():
    assert quantum_integer(0) == ZERO
    assert quantum_integer(3) == P("v^2 + 1 + v^-2")
    assert quantum_integer(-2) == -quantum_integer(2)
    assert quantum_integer(2) * (vpow(1) - vpow(-1)) == vpow(2) - vpow(-2)


def test_non_integer_coefficient_refused():
    with pytest.raises(TypeError):
        LaurentPolynomial({0: 0.5})


def test_format_and_parse():
    p = P("-2*v^3 + v - 1 + v^-2")
    assert p.format() == "-2*v^3 + v - 1 + v^-2"
    assert p.to_latex() == "-2v^{3} + v - 1 + v^{-2}"
    with pytest.raises(ValueError):
        P("v^")


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys)
def test_bar_is_ring_involution(a, b):
    assert a.bar().bar() == a
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()


@given(polys)
def test_text_and_json_round_trip(a):
    assert P(a.format()) == a
    assert LaurentPolynomial.from_json(a.to_json()) == a


@given(polys, polys)
def test_exact_division(a, b):
    if b:
        assert (a * b).exact_div(b) == a


@given(polys, st.integers(-5, 5))
def test_positive_negative_split(a, k):
    assert a.positive_part() + a.negative_part() + LaurentPolynomial.constant(a.coeff(0)) == a
    assert a.shift(k).shift(-k) == a
    assert (a + a.bar()).is_bar_symmetric()
