"""Exact Laurent polynomials in one variable with integer coefficients.

Elements are immutable once constructed. The variable is called ``v`` and
the bar involution sends ``v`` to ``v**-1``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPolynomial:
    """Sparse element of Z[v, v^-1] stored as ``{exponent: coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    if not isinstance(c, int):
                        if isinstance(c, Fraction) and c.denominator == 1:
                            c = int(c)
                        else:
                            raise TypeError(f"non-integer coefficient {c!r}")
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "LaurentPolynomial":
        # trusted constructor: terms already has no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls._wrap({exponent: coeff} if coeff else {})

    @classmethod
    def constant(cls, c: int) -> "LaurentPolynomial":
        return cls.monomial(0, c)

    @classmethod
    def coerce(cls, x) -> "LaurentPolynomial":
        if isinstance(x, LaurentPolynomial):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        raise TypeError(f"cannot coerce {x!r} to a Laurent polynomial")

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())) in (1, -1)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPolynomial._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPolynomial.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPolynomial._wrap({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentPolynomial._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_unit():
                raise ValueError("only units have negative powers")
            ((e, c),) = self._terms.items()
            return LaurentPolynomial.monomial(e * k, c ** (-k))
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``v**k``."""
        if not k:
            return self
        return LaurentPolynomial._wrap({e + k: c for e, c in self._terms.items()})

    def exact_div(self, other) -> "LaurentPolynomial":
        """Exact quotient; raises ``ArithmeticError`` if ``other`` does not divide."""
        other = LaurentPolynomial.coerce(other)
        if not other._terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._terms:
            return ZERO
        # long division of the normalised polynomials, both with nonzero constant term
        a_lo, b_lo = self.min_degree, other.min_degree
        rem = {e - a_lo: c for e, c in self._terms.items()}
        div = {e - b_lo: c for e, c in other._terms.items()}
        top = max(div)
        lead = div[top]
        quot: dict = {}
        while rem:
            e = max(rem)
            if e < top:
                raise ArithmeticError("inexact division")
            c = rem[e]
            if c % lead:
                raise ArithmeticError("inexact division")
            qc, qe = c // lead, e - top
            quot[qe + a_lo - b_lo] = qc
            for de, dc in div.items():
                k = qe + de
                s = rem.get(k, 0) - qc * dc
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return LaurentPolynomial._wrap(quot)

    # -- involutions and evaluation ---------------------------------------
    def bar(self) -> "LaurentPolynomial":
        return LaurentPolynomial._wrap({-e: c for e, c in self._terms.items()})

    def substitute_power(self, k: int) -> "LaurentPolynomial":
        """Replace ``v`` by ``v**k``."""
        if k == 0:
            return LaurentPolynomial.constant(sum(self._terms.values()))
        return LaurentPolynomial._wrap({e * k: c for e, c in self._terms.items()})

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def evaluate(self, x):
        """Evaluate at a number; ``Fraction`` keeps negative powers exact."""
        total = 0
        for e, c in self._terms.items():
            total += c * (Fraction(x) ** e if e < 0 else x ** e)
        return total

    def is_bar_symmetric(self) -> bool:
        return all(self._terms.get(-e) == c for e, c in self._terms.items())

    def is_bar_antisymmetric(self) -> bool:
        return all(self._terms.get(-e) == -c for e, c in self._terms.items())

    def positive_part(self) -> "LaurentPolynomial":
        return LaurentPolynomial._wrap({e: c for e, c in self._terms.items() if e > 0})

    def negative_part(self) -> "LaurentPolynomial":
        return LaurentPolynomial._wrap({e: c for e, c in self._terms.items() if e < 0})

    def in_positive_span(self) -> bool:
        """True if every exponent is >= 1, i.e. the element lies in v Z[v]."""
        return all(e >= 1 for e in self._terms)

    def in_negative_span(self) -> bool:
        return all(e <= -1 for e in self._terms)

    # -- comparison, hashing, printing ------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPolynomial({self!s})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "v") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        s = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def to_latex(self, var: str = "v") -> str:
        if not self._terms:
            return "0"
        out = ""
        for i, (e, c) in enumerate(sorted(self._terms.items(), reverse=True)):
            mag = abs(c)
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{{{e}}}")
            body = (str(mag) if mag != 1 or e == 0 else "") + mono
            if i == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def to_json(self) -> list:
        return [[e, c] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: Iterable) -> "LaurentPolynomial":
        out: dict = {}
        for e, c in data:
            if not isinstance(e, int) or not isinstance(c, int):
                raise ValueError("polynomial JSON must hold integer pairs")
            out[e] = out.get(e, 0) + c
        return cls(out)


ZERO = LaurentPolynomial._wrap({})
ONE = LaurentPolynomial._wrap({0: 1})
V = LaurentPolynomial._wrap({1: 1})
V_INV = LaurentPolynomial._wrap({-1: 1})


def vpow(k: int, coeff: int = 1) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(k, coeff)


def quantum_integer(m: int) -> LaurentPolynomial:
    """(v^m - v^-m) / (v - v^-1)."""
    if m == 0:
        return ZERO
    sign = 1 if m > 0 else -1
    m = abs(m)
    return LaurentPolynomial({m - 1 - 2 * k: sign for k in range(m)})


_TERM = re.compile(r"([+-])(\d*)\*?(v(?:\^\(?(-?\d+)\)?)?)?")


def parse_laurent(text: str) -> LaurentPolynomial:
    """Parse strings such as ``"v^-1 - 2*v + 3"``."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    out = ZERO
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos + 1 or (not m.group(2) and not m.group(3)):
            raise ValueError(f"bad polynomial {text!r}")
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) is not None else 1
        else:
            exp = 0
        out = out + vpow(exp, -coef if m.group(1) == "-" else coef)
        pos = m.end()
    return out


def _lagrange(points: list[tuple[int, int]]) -> list[Fraction]:
    """Coefficients (low to high) of the interpolating polynomial."""
    m = len(points)
    coeffs = [Fraction(0)] * m
    for k, (xk, yk) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == k:
                continue
            nb = [Fraction(0)] * (len(basis) + 1)
            for t, b in enumerate(basis):
                nb[t] -= b * xj
                nb[t + 1] += b
            basis = nb
            denom *= xk - xj
        for t, b in enumerate(basis):
            coeffs[t] += b * yk / denom
    return coeffs


class FitError(ArithmeticError):
    """Raised when counts are not reproduced by an integral polynomial."""


def fit_polynomial_in_Q(samples: Mapping[int, int], degree_bound: int) -> list[int]:
    """Fit integer counts at several field sizes by a polynomial in Q.

    Needs ``degree_bound + 2`` samples: one beyond the minimum is held out
    and must be reproduced exactly.  Returns integer coefficients, low to high.
    """
    pts = sorted(samples.items())
    need = degree_bound + 1
    if len(pts) < need + 1:
        raise FitError(f"need {need + 1} samples for degree bound {degree_bound}, got {len(pts)}")
    coeffs = _lagrange(pts[:need])
    if any(c.denominator != 1 for c in coeffs):
        raise FitError(f"non-integral interpolation {coeffs}")
    ints = [int(c) for c in coeffs]
    for x, y in pts[need:]:
        if sum(c * x ** t for t, c in enumerate(ints)) != y:
            raise FitError(f"held-out sample at Q={x} not reproduced")
    while len(ints) > 1 and ints[-1] == 0:
        ints.pop()
    return ints


def poly_in_Q_to_laurent(coeffs: list[int]) -> LaurentPolynomial:
    """Substitute Q = v^2."""
    return LaurentPolynomial({2 * t: c for t, c in enumerate(coeffs)})
