"""Bruhat order and Kazhdan-Lusztig polynomials of extended affine symmetric
groups, and the resulting formulas for canonical bases of finite wedges.

KL polynomials are returned in the classical variable q (printed as ``q``);
in the Hecke algebra normalisation used for wedges q = v^-2.
"""
from __future__ import annotations

from functools import lru_cache

from .combinat import (
    AffinePermutation,
    act_on_word,
    alcove_decompose,
    beta_word,
    finite_permutations,
    is_partition,
    partition_of_word,
    stabilizer_longest,
)
from .laurent import ONE, ZERO, LaurentPolynomial, vpow


def _key(w: AffinePermutation):
    return w.window


@lru_cache(maxsize=None)
def _bruhat_leq(y: tuple, x: tuple) -> bool:
    yw, xw = AffinePermutation(y), AffinePermutation(x)
    if yw.rotation_power != xw.rotation_power:
        return False
    ly, lx = yw.length(), xw.length()
    if ly > lx:
        return False
    if lx == 0:
        return y == x
    s = xw.right_descents()[0]
    xs = xw.times_simple(s)
    ys = yw.times_simple(s)
    low = ys if ys.length() < ly else yw
    return _bruhat_leq(low.window, xs.window)


def bruhat_leq(y: AffinePermutation, x: AffinePermutation) -> bool:
    """Bruhat order; elements with different rotation parts are incomparable."""
    return _bruhat_leq(y.window, x.window)


@lru_cache(maxsize=None)
def _lower_interval(x: tuple) -> frozenset:
    xw = AffinePermutation(x)
    if xw.length() == 0:
        return frozenset([x])
    s = xw.right_descents()[0]
    below = _lower_interval(xw.times_simple(s).window)
    out = set(below)
    for u in below:
        out.add(AffinePermutation(u).times_simple(s).window)
    return frozenset(out)


def lower_interval(x: AffinePermutation) -> list[AffinePermutation]:
    """All y with y <= x, sorted by length."""
    return sorted((AffinePermutation(u) for u in _lower_interval(x.window)), key=lambda w: (w.length(), w.window))


Q1 = LaurentPolynomial.monomial(1)


@lru_cache(maxsize=None)
def _kl(y: tuple, x: tuple) -> LaurentPolynomial:
    if not _bruhat_leq(y, x):
        return ZERO
    if y == x:
        return ONE
    xw, yw = AffinePermutation(x), AffinePermutation(y)
    s = xw.right_descents()[0]
    v = xw.times_simple(s)
    ys = yw.times_simple(s)
    c = 1 if ys.length() < yw.length() else 0
    out = _kl(ys.window, v.window).shift(1 - c) + _kl(y, v.window).shift(c)
    lx = xw.length()
    for z in _lower_interval(v.window):
        zw = AffinePermutation(z)
        if z == v.window or not zw.has_right_descent(s) or not _bruhat_leq(y, z):
            continue
        m = _mu(z, v.window)
        if m:
            out = out - _kl(y, z).shift((lx - zw.length()) // 2) * m
    return out


@lru_cache(maxsize=None)
def _mu(y: tuple, x: tuple) -> int:
    ly, lx = AffinePermutation(y).length(), AffinePermutation(x).length()
    if (lx - ly) % 2 == 0:
        return 0
    return _kl(y, x).coeff((lx - ly - 1) // 2)


def kl_polynomial(y: AffinePermutation, x: AffinePermutation) -> LaurentPolynomial:
    """P_{y,x} as a polynomial in the classical variable q."""
    return _kl(y.window, x.window)


def kl_mu(y: AffinePermutation, x: AffinePermutation) -> int:
    return _mu(y.window, x.window)


def to_hecke_variable(p: LaurentPolynomial) -> LaurentPolynomial:
    """Substitute q = v^-2."""
    return p.substitute_power(-2)


def parabolic_kl(i, y: AffinePermutation, x: AffinePermutation) -> LaurentPolynomial:
    """sum over z in S_l of (-1)^{l(z)} P_{w_i y z, w_i x}, in the classical variable."""
    wi = stabilizer_longest(i)
    top = wi * x
    out = ZERO
    for z in finite_permutations(x.l):
        u = wi * y * z
        if bruhat_leq(u, top):
            out = out + kl_polynomial(u, top) * (-1) ** (z.length() % 2)
    return out


def _check_lambda(lam, l):
    lam = tuple(lam)
    if not is_partition(lam) or len(lam) > l:
        raise ValueError(f"{lam} is not a partition with at most {l} parts")
    return lam


def b_minus_via_kl(lam, n: int, l: int) -> dict:
    """The basis vector b^-_lam of the length-l wedge space from KL polynomials."""
    lam = _check_lambda(lam, l)
    i, x = alcove_decompose(beta_word(lam, l), n)
    lx = x.length()
    out: dict = {}
    for y in lower_interval(x):
        word = act_on_word(i, y, n)
        if any(word[k] <= word[k + 1] for k in range(l - 1)):
            continue
        mu = partition_of_word(word)
        if mu is None:
            continue
        ly = y.length()
        l_stab = ly - alcove_decompose(word, n)[1].length()
        sign = -1 if (ly - lx) % 2 else 1
        coeff = to_hecke_variable(kl_polynomial(y, x)).bar().shift(ly - lx - l_stab) * sign
        new = out.get(mu, ZERO) + coeff
        if new:
            out[mu] = new
        else:
            out.pop(mu, None)
    return out


def b_plus_via_kl(lam, n: int, l: int) -> dict:
    """The basis vector b^+_lam of the length-l wedge space from parabolic KL polynomials."""
    lam = _check_lambda(lam, l)
    word = beta_word(lam, l)
    i, xr = alcove_decompose(word[::-1], n)
    lx = xr.length()
    out: dict = {}
    for y in lower_interval(xr):
        inc = act_on_word(i, y, n)
        if any(inc[k] >= inc[k + 1] for k in range(l - 1)):
            continue
        if alcove_decompose(inc, n)[1] != y:
            continue
        q = parabolic_kl(i, y, xr)
        if not q:
            continue
        coeff = to_hecke_variable(q).shift(lx - y.length())
        mu = partition_of_word(inc[::-1])
        if mu is None:
            raise ArithmeticError(f"term {inc[::-1]} outside the partition range")
        out[mu] = out.get(mu, ZERO) + coeff
    return {k: c for k, c in out.items() if c}
