"""Affine Hecke action on tensor space, wedge straightening, the involution
psi and the quantum affine action on finite and semi-infinite wedges.

Vectors are dictionaries mapping a basis label (a word of integers, or a
partition for Fock space) to a ``LaurentPolynomial``.
"""
from __future__ import annotations

import sys
from functools import lru_cache
from itertools import combinations, product

from .combinat import (
    alcove_point,
    beta_word,
    parabolic_lengths,
    partition_of_word,
    residue_data,
)
from .laurent import ONE, ZERO, LaurentPolynomial, quantum_integer, vpow

Vector = dict


# ---------------------------------------------------------------- sparse vectors

def vec_add(acc: dict, other: dict, scale: LaurentPolynomial = ONE) -> dict:
    """acc += scale * other, in place; returns acc."""
    for key, c in other.items():
        term = c * scale if scale is not ONE else c
        new = acc.get(key, ZERO) + term
        if new:
            acc[key] = new
        else:
            acc.pop(key, None)
    return acc


def vec_scale(vec: dict, scale) -> dict:
    scale = LaurentPolynomial.coerce(scale)
    if not scale:
        return {}
    return {k: c * scale for k, c in vec.items()}


def vec_sub(a: dict, b: dict) -> dict:
    return vec_add(dict(a), b, LaurentPolynomial.constant(-1))


def vec_clean(vec: dict) -> dict:
    return {k: c for k, c in vec.items() if c}


def vec_bar(vec: dict) -> dict:
    return {k: c.bar() for k, c in vec.items()}


def as_vector(x) -> dict:
    if isinstance(x, dict):
        return x
    return {tuple(x): ONE}


# ---------------------------------------------------------------- Hecke action on the tensor space

_V1 = vpow(-1)
_V2 = vpow(-2)
_V2_MINUS_1 = vpow(-2) - 1
_ONE_MINUS_V2 = 1 - vpow(-2)


@lru_cache(maxsize=None)
def _pair_T_reduced(a: int, b: int, n: int) -> tuple:
    """T acting on x_a (x) x_b for 1-n <= a <= 0 and arbitrary b.

    Entries outside the window are brought in with X_2^{-1} T = (T + 1 - v^-2) X_1^{-1}
    and X_2 T = T X_1 - (1 - v^-2) X_2.
    """
    if 1 - n <= b <= 0:
        if a == b:
            return (((a, b), _V2),)
        if a < b:
            return (((b, a), _V1),)
        return (((b, a), _V1), ((a, b), _V2_MINUS_1))
    out: dict = {}
    if b > 0:
        # x_(a,b) = x_(a,b-n) X_2^{-1}
        for (p, q), c in _pair_T_reduced(a, b - n, n):
            vec_add(out, {(p + n, q): c})
        vec_add(out, {(a + n, b - n): _ONE_MINUS_V2})
    else:
        # x_(a,b) = x_(a,b+n) X_2
        for (p, q), c in _pair_T_reduced(a, b + n, n):
            vec_add(out, {(p - n, q): c})
        vec_add(out, {(a, b): -_ONE_MINUS_V2})
    return tuple(sorted(out.items()))


def pair_T(a: int, b: int, n: int) -> tuple:
    """T on the two-factor tensor x_a (x) x_b, as ((p, q), coeff) pairs."""
    m = -((-a) % n) - a  # multiple of n moving a into the window
    if m == 0:
        return _pair_T_reduced(a, b, n)
    return tuple(((p - m, q - m), c) for (p, q), c in _pair_T_reduced(a + m, b + m, n))


def hecke_T(vec, k: int, n: int) -> dict:
    """Right action of T_k (1 <= k < l) on a tensor vector."""
    vec = as_vector(vec)
    out: dict = {}
    for word, c in vec.items():
        for (p, q), d in pair_T(word[k - 1], word[k], n):
            new = word[: k - 1] + (p, q) + word[k + 1 :]
            vec_add(out, {new: d * c})
    return out


def hecke_X(vec, j: int, n: int, power: int = 1) -> dict:
    """Right action of X_j**power: X_j^{-1} adds n to entry j."""
    vec = as_vector(vec)
    out = {}
    for word, c in vec.items():
        w = list(word)
        w[j - 1] -= n * power
        out[tuple(w)] = c
    return out


def hecke_T_inverse(vec, k: int, n: int) -> dict:
    """T_k^{-1} = v^2 T_k + (v^2 - 1)."""
    vec = as_vector(vec)
    out = vec_scale(hecke_T(vec, k, n), vpow(2))
    return vec_add(out, vec, vpow(2) - 1)


# ---------------------------------------------------------------- straightening

def _pair_rule(a: int, b: int, n: int) -> tuple:
    """x_a ^ x_b for a < b as a combination of other pairs, from x (T + 1) = 0."""
    terms = dict(pair_T(a, b, n))
    self_coeff = terms.pop((a, b), ZERO) + 1
    if self_coeff != ONE:
        if not self_coeff.is_unit():
            raise ArithmeticError(f"pair ({a},{b}) cannot be straightened over the ring")
        inv = self_coeff ** -1
    else:
        inv = ONE
    return tuple(((p, q), -c * inv) for (p, q), c in terms.items())


_pair_rule = lru_cache(maxsize=None)(_pair_rule)


class StraighteningError(RuntimeError):
    pass


@lru_cache(maxsize=200000)
def _straighten_word(word: tuple, n: int) -> tuple:
    for k in range(len(word) - 1):
        a, b = word[k], word[k + 1]
        if a > b:
            continue
        if a == b:
            return ()
        out: dict = {}
        for (p, q), c in _pair_rule(a, b, n):
            sub = word[:k] + (p, q) + word[k + 2 :]
            for w, d in _straighten_word(sub, n):
                vec_add(out, {w: d * c})
        return tuple(out.items())
    return ((word, ONE),)


def straighten(x, n: int) -> dict:
    """Normal form in the wedge quotient: a combination of strictly decreasing words."""
    vec = as_vector(x)
    out: dict = {}
    old = sys.getrecursionlimit()
    if old < 20000:
        sys.setrecursionlimit(20000)
    for word, c in vec.items():
        for w, d in _straighten_word(tuple(word), n):
            vec_add(out, {w: d * c})
    return out


def is_normal(word) -> bool:
    return all(word[k] > word[k + 1] for k in range(len(word) - 1))


# ---------------------------------------------------------------- brute-force quotient

class QuotientReduction:
    """Exact reduction modulo sum_k Im(T_k + 1) on the words with entries in a window.

    Words of a fixed entry sum span a T-stable subspace; each is handled by
    a reduced row echelon form over Z[v] with the non-decreasing words as
    leading columns.  Used to certify ``straighten``.
    """

    def __init__(self, l: int, n: int, lo: int, hi: int):
        from sympy import ZZ, symbols
        from sympy.polys.matrices import DomainMatrix

        self.l, self.n, self.lo, self.hi = l, n, lo, hi
        v = symbols("v")
        ring = ZZ[v]
        field = ring.get_field()
        by_sum: dict = {}
        for w in product(range(lo, hi + 1), repeat=l):
            by_sum.setdefault(sum(w), []).append(w)
        self.table: dict = {}
        self.rank = 0
        self.normal_count = 0
        self.stable = True
        for words in by_sum.values():
            cols = sorted(words, key=lambda w: (is_normal(w), w))
            index = {w: i for i, w in enumerate(cols)}
            free = sum(1 for w in cols if not is_normal(w))
            self.normal_count += len(cols) - free
            rows = []
            for w in cols:
                for k in range(1, l):
                    img = vec_add(hecke_T({w: ONE}, k, n), {w: ONE})
                    if not img:
                        continue
                    shift = min(c.min_degree for c in img.values())
                    row = [ring.zero] * len(cols)
                    for x, c in img.items():
                        if x not in index:
                            self.stable = False
                            raise ValueError(f"window [{lo},{hi}] is not T-stable")
                        row[index[x]] = ring.from_sympy(sum(a * v ** (e - shift) for e, a in c.items()))
                    rows.append(row)
            for w in cols[free:]:
                self.table[w] = {w: ONE}
            if not rows:
                continue
            rref, den, pivots = DomainMatrix(rows, (len(rows), len(cols)), ring).rref_den(method="GJ")
            self.rank += len(pivots)
            entries = rref.to_list()
            for r, col in enumerate(pivots):
                if col >= free:
                    continue
                red = {}
                for j in range(free, len(cols)):
                    if entries[r][j]:
                        red[cols[j]] = _to_laurent(field, ring, -entries[r][j], den)
                self.table[cols[col]] = red

    def reduce(self, word) -> dict:
        """Class of a word in the quotient, on the strictly decreasing words."""
        word = tuple(word)
        if word not in self.table:
            raise KeyError(f"{word} is outside the window or was not reduced")
        return dict(self.table[word])

    def dimension(self) -> int:
        return sum(1 for _ in self.table) - self.rank


def _to_laurent(field, ring, a, b) -> LaurentPolynomial:
    f = field.convert_from(a, ring) / field.convert_from(b, ring)
    den = list(f.denom.terms())
    if len(den) != 1:
        raise ArithmeticError("reduction coefficient is not a Laurent polynomial")
    (shift,), scale = den[0]
    out = {}
    for (e,), c in f.numer.terms():
        if c % scale:
            raise ArithmeticError("reduction coefficient is not integral")
        out[e - shift] = int(c // scale)
    return LaurentPolynomial._wrap(out)


def quotient_oracle(l: int, n: int, lo: int = -4, hi: int = 4) -> QuotientReduction:
    return QuotientReduction(l, n, lo, hi)


def hecke_relations_hold(n: int, l: int, lo: int, hi: int) -> bool:
    """Quadratic, braid and Bernstein relations on every word with entries in [lo, hi]."""
    def T(x, k):
        return hecke_T(x, k, n)

    def X(x, j, p=1):
        return hecke_X(x, j, n, p)

    def same(a, b):
        return vec_clean(vec_sub(a, b)) == {}

    for w in product(range(lo, hi + 1), repeat=l):
        x = {w: ONE}
        for k in range(1, l):
            # (T + 1)(T - v^-2) = 0
            y = vec_add(T(x, k), x)
            if vec_clean(vec_add(T(y, k), y, -_V2)):
                return False
            # T X_k T = v^-2 X_{k+1}
            if not same(T(X(T(x, k), k), k), vec_scale(X(x, k + 1), _V2)):
                return False
            for j in range(1, l + 1):
                if j not in (k, k + 1) and not same(T(X(x, j), k), X(T(x, k), j)):
                    return False
            if k + 1 < l and not same(T(T(T(x, k), k + 1), k), T(T(T(x, k + 1), k), k + 1)):
                return False
        for i in range(1, l + 1):
            for j in range(1, l + 1):
                if not same(X(X(x, i), j), X(X(x, j), i)):
                    return False
            if not same(X(X(x, i), i, -1), x):
                return False
    return True


# ---------------------------------------------------------------- the involution psi

def psi_word(word, n: int) -> dict:
    """psi on a single strictly decreasing word (finite wedge)."""
    word = tuple(word)
    l = len(word)
    full, _, rest = parabolic_lengths(alcove_point(word, n))
    sign = -1 if full % 2 else 1
    return vec_scale(straighten(word[::-1], n), vpow(rest, sign))


def psi_finite(vec, n: int) -> dict:
    """The semilinear involution on finite wedges."""
    vec = as_vector(vec)
    out: dict = {}
    for word, c in vec.items():
        if not is_normal(word):
            raise ValueError(f"{word} is not a normal (strictly decreasing) word")
        vec_add(out, psi_word(word, n), c.bar())
    return out


def psi_window(lam, n: int) -> int:
    """Smallest admissible truncation length for psi on |lam>."""
    return max(sum(lam), len(lam), 1)


def _psi_partition(lam: tuple, n: int, length: int) -> dict:
    word = beta_word(lam, length)
    out: dict = {}
    for w, c in psi_word(word, n).items():
        mu = partition_of_word(w)
        if mu is None:
            raise StraighteningError(f"truncation {length} too short for {lam}")
        out[mu] = c
    return out


@lru_cache(maxsize=None)
def _psi_partition_checked(lam: tuple, n: int) -> tuple:
    length = psi_window(lam, n)
    res = _psi_partition(lam, n, length)
    return tuple(res.items())


def psi_semiinfinite(vec, n: int, check: bool = False) -> dict:
    """The involution on Fock space vectors (keys are partitions)."""
    out: dict = {}
    for lam, c in vec.items():
        img = dict(_psi_partition_checked(tuple(lam), n))
        if check:
            again = _psi_partition(tuple(lam), n, psi_window(lam, n) + n)
            if again != img:
                raise StraighteningError(f"psi on {lam} depends on the truncation")
        vec_add(out, img, c.bar())
    return out


# ---------------------------------------------------------------- quantum affine action on wedges

def _bump_exponent(word, chosen, n: int) -> int:
    """Exponent of v for raising the entries at positions ``chosen`` by one."""
    e = 0
    for t in chosen:
        rt = word[t] % n
        for s in range(t):
            if s in chosen:
                continue
            rs = word[s] % n
            e += (rs == rt) - (rs == (rt + 1) % n)
    return e


def f_alpha_word(alpha, word, n: int) -> dict:
    """Action of the divided-power generator f_alpha on a tensor or wedge word.

    Returns the tensor-space result (words not straightened).
    """
    word = tuple(word)
    alpha = tuple(alpha)
    by_res: dict = {}
    for pos, a in enumerate(word):
        by_res.setdefault(a % n, []).append(pos)
    choices = []
    for r in range(n):
        need = alpha[r]
        have = by_res.get(r, [])
        if need > len(have):
            return {}
        choices.append(list(combinations(have, need)))
    out: dict = {}
    for pick in product(*choices):
        chosen = frozenset(p for grp in pick for p in grp)
        new = tuple(a + (1 if k in chosen else 0) for k, a in enumerate(word))
        vec_add(out, {new: vpow(_bump_exponent(word, chosen, n))})
    return out


def f_alpha_wedge(alpha, vec, n: int) -> dict:
    """f_alpha on finite wedges, result in normal form."""
    vec = as_vector(vec)
    out: dict = {}
    for word, c in vec.items():
        vec_add(out, straighten(f_alpha_word(alpha, word, n), n), c)
    return out


def fock_window(lam, extra: int) -> int:
    return len(lam) + extra + 1


def f_alpha_fock(alpha, vec, n: int) -> dict:
    """f_alpha on Fock space, by truncating semi-infinite wedges."""
    extra = sum(alpha)
    out: dict = {}
    for lam, c in vec.items():
        length = fock_window(lam, extra)
        res = f_alpha_wedge(alpha, beta_word(lam, length), n)
        img = {}
        for w, d in res.items():
            mu = partition_of_word(w)
            if mu is None:
                raise StraighteningError(f"window too short for {lam}")
            img[mu] = d
        vec_add(out, img, c)
    return out


def unit_vector(alpha_index: int, n: int) -> tuple:
    e = [0] * n
    e[alpha_index % n] = 1
    return tuple(e)


# ---------------------------------------------------------------- Hayashi action on Fock space

def _add_box(lam, i: int):
    """Partition with a box of content i added, or None."""
    rows = list(lam) + [0]
    for r, row in enumerate(rows):
        if row - r == i and (r == 0 or rows[r - 1] > row):
            rows[r] += 1
            return tuple(p for p in rows if p)
    return None


def _remove_box(lam, i: int):
    rows = list(lam)
    for r, row in enumerate(rows):
        if row > 0 and row - 1 - r == i and (r + 1 >= len(rows) or rows[r + 1] < row):
            rows[r] -= 1
            return tuple(p for p in rows if p)
    return None


def hayashi_f(r: int, vec, n: int) -> dict:
    out: dict = {}
    for lam, c in vec.items():
        data = residue_data(lam, n)
        for i in _class_contents(lam, r, n, addable=True):
            mu = _add_box(lam, i)
            if mu is not None:
                vec_add(out, {mu: vpow(data.above(i))}, c)
    return out


def hayashi_e(r: int, vec, n: int) -> dict:
    out: dict = {}
    for lam, c in vec.items():
        data = residue_data(lam, n)
        for i in _class_contents(lam, r, n, addable=False):
            mu = _remove_box(lam, i)
            if mu is not None:
                vec_add(out, {mu: vpow(-data.below(i))}, c)
    return out


def hayashi_k(r: int, vec, n: int, power: int = 1) -> dict:
    out: dict = {}
    for lam, c in vec.items():
        vec_add(out, {lam: vpow(power * residue_data(lam, n).total(r))}, c)
    return out


def _class_contents(lam, r, n, addable):
    from .combinat import addable_removable
    add, rem = addable_removable(lam)
    return [i for i in (add if addable else rem) if (i - r) % n == 0]


def commutator_check(i: int, j: int, lam, n: int) -> bool:
    """[e_i, f_j] |lam> = delta_ij (k - k^-1)/(v - v^-1) |lam>."""
    vec = {tuple(lam): ONE}
    lhs = vec_sub(hayashi_e(i, hayashi_f(j, vec, n), n), hayashi_f(j, hayashi_e(i, vec, n), n))
    if i % n != j % n:
        return not vec_clean(lhs)
    m = residue_data(tuple(lam), n).total(i)
    return vec_clean(lhs) == vec_clean({tuple(lam): quantum_integer(m)})
