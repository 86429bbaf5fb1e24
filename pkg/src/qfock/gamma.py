"""Transfer from the cyclic quiver Hall algebra to the Hall algebra of the
linear quiver on Z, and the Fock space action it induces.

A Z-graded dimension vector d lifts a cyclic one.  gamma_d sends an ordered
product of cyclic generators to a weighted sum of products of linear
generators, one for each way of lifting every layer.  The weights are read
with v = q^-1 on the geometric side, the reading under which the transfer
reproduces the wedge action of the generators (see ``fock_action_via_gamma``).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product as iproduct

from . import fqlinalg as fq
from .combinat import Multisegment, addable_removable, dimvec_dict, dimvec_from_dict, enumerate_multisegments
from .hallalg import (
    HallVector,
    Representation,
    hall_bar,
    multisegment_from_ranks,
    flag_monomial,
    flag_twist,
    normalize_flag,
    orbit_as_generator_products,
)
from .heckewedge import _add_box, vec_add
from .laurent import ONE, ZERO

def h_exponent(d, n: int) -> int:
    """sum over i < j in the same class of d_i (d_{j+1} - d_j)."""
    d = dimvec_dict(d)
    if not d:
        return 0
    top = max(d)
    total = 0
    for i, di in d.items():
        for j in range(i + n, top + 1, n):
            total += di * (d.get(j + 1, 0) - d.get(j, 0))
    return total


def k_exponent(b, a, n: int) -> int:
    """sum over i > j in the same class of b_i (2a_j - a_{j-1} - a_{j+1})."""
    b, a = dimvec_dict(b), dimvec_dict(a)
    total = 0
    for i, bi in b.items():
        for j in range(min(a, default=i) - 1, i):
            if (i - j) % n == 0:
                total += bi * (2 * a.get(j, 0) - a.get(j - 1, 0) - a.get(j + 1, 0))
    return total


def bundle_rank(flag, n: int) -> int:
    """Rank of the bundle of filtered lifts over a Z-graded stable flag."""
    layers = [dimvec_dict(x) for x in flag]
    total = 0
    for k, dk in enumerate(layers):
        for l, dl in enumerate(layers):
            for j, a in dk.items():
                for i, b in dl.items():
                    if i > j and (i - j) % n == 0:
                        if k < l:
                            total += a * b
                    if i - 1 > j and (i - 1 - j) % n == 0 and k > l:
                        # d^k_j d^l_{i'+1} with i' = i - 1 > j
                        total += a * b
    return total


def _distribute(row_sums, col_caps):
    """Nonnegative matrices with given row sums and column sums."""
    if not row_sums:
        if all(c == 0 for c in col_caps):
            yield ()
        return
    first, rest = row_sums[0], row_sums[1:]

    def rows(total, caps):
        if not caps:
            if total == 0:
                yield ()
            return
        for x in range(min(total, caps[0]) + 1):
            for tail in rows(total - x, caps[1:]):
                yield (x,) + tail

    for row in rows(first, col_caps):
        left = tuple(c - x for c, x in zip(col_caps, row))
        for tail in _distribute(rest, left):
            yield (row,) + tail


def flag_lifts(flag, d, n: int):
    """All Z-graded flags of total dimension d reducing to the given cyclic flag."""
    d = dimvec_dict(d)
    flag = tuple(flag)
    per_class = []
    for r in range(n):
        idx = sorted(i for i in d if i % n == r)
        rows = [layer[r] for layer in flag]
        if sum(rows) != sum(d[i] for i in idx):
            return
        per_class.append((idx, list(_distribute(rows, tuple(d[i] for i in idx)))))
    for choice in iproduct(*[opts for _, opts in per_class]):
        layers = []
        for k in range(len(flag)):
            entry = {}
            for (idx, _), mat in zip(per_class, choice):
                for i, x in zip(idx, mat[k]):
                    if x:
                        entry[i] = x
            layers.append(dimvec_from_dict(None, entry))
        yield tuple(layers)


def reduce_dim(d, n: int) -> tuple:
    out = [0] * n
    for i, c in dimvec_dict(d).items():
        out[i % n] += c
    return tuple(out)


def gamma_products(f: HallVector, d) -> dict:
    """gamma_d(f) as coefficients on ordered products of linear generators."""
    n = f.n
    d = dimvec_from_dict(None, dimvec_dict(d))
    if reduce_dim(d, n) != tuple(f.dim):
        raise ValueError("d does not lift the grading of f")
    h = h_exponent(d, n)
    out: dict = {}
    for flag, c in orbit_as_generator_products(f).items():
        base = flag_twist(n, flag) + h
        for lift in flag_lifts(flag, d, n):
            e = base - flag_twist(None, lift) - 2 * bundle_rank(lift, n)
            key = normalize_flag(lift)
            out[key] = out.get(key, ZERO) + c.shift(e)
    return {k: c for k, c in out.items() if c}


def gamma_map(d, f: HallVector) -> HallVector:
    """gamma_d(f) in the orbit basis of the linear quiver."""
    d = dimvec_from_dict(None, dimvec_dict(d))
    out = HallVector.zero(None, d)
    for flag, c in gamma_products(f, d).items():
        out = out + flag_monomial(None, flag).scale(c.shift(-flag_twist(None, flag)))
    return out


def reduce_multisegment(ms: Multisegment, n: int) -> Multisegment:
    """Forget the Z-grading: the same segments read modulo n."""
    return Multisegment.from_segments(n, [(s % n, length) for s, length in ms.segments()])


def lift_counts(ms: Multisegment, n: int, p: int) -> dict:
    """For x in the linear orbit ms over GF(p), count the lifts x + y by cyclic orbit.

    y runs over maps V_j -> V_{i+1} with i > j in the same class, the maps
    that shift the Z-filtration of the cyclic space down by at least one.
    """
    rep = Representation(ms, p)
    dim = rep.dim
    where = rep.vertex_of
    slots = [(t, u) for t in range(dim) for u in range(dim)
             if where[u] - 1 > where[t] and (where[u] - 1 - where[t]) % n == 0]
    base = [[0] * dim for _ in range(dim)]  # base[u][t]: coefficient of e_u in x(e_t)
    for t, u in rep._next.items():
        base[u][t] = 1
    out: dict = {}
    for values in iproduct(range(p), repeat=len(slots)):
        mat = [row[:] for row in base]
        for (t, u), a in zip(slots, values):
            mat[u][t] = a
        cols = [[mat[u][t] for u in range(dim)] for t in range(dim)]

        def act(vec, k):
            for _ in range(k):
                vec = [sum(c[u] * vec[t] for t, c in enumerate(cols)) % p for u in range(dim)]
            return vec

        def rank(i, k):
            return fq.rank_mod([act(rep._e(t), k) for t in range(dim) if where[t] % n == i], p)

        key = multisegment_from_ranks(n, list(range(n)), rank, dim)
        out[key] = out.get(key, 0) + 1
    return out


def gamma_counting_check(d, n: int, primes=(2, 3)) -> bool:
    """Compare gamma_d against direct lift counting at small primes.

    With v = q^-1 on the geometric side, bar(gamma_d(bar 1_O)) has
    coefficient v^-h(d) N(v^2) on 1_O', where N(Q) counts lifts of a point
    of O' into O over GF(Q).
    """
    d = dimvec_from_dict(None, dimvec_dict(d))
    h = h_exponent(d, n)
    dbar = reduce_dim(d, n)
    lin = enumerate_multisegments(None, d)
    for target in enumerate_multisegments(n, dbar):
        ind = HallVector(n, dbar, {target: ONE.shift(-target.orbit_dim())})
        img = hall_bar(gamma_map(d, hall_bar(ind)))
        for lo in lin:
            poly = img.coeff(lo).shift(lo.orbit_dim() + h)
            if any(e % 2 for e, _ in poly.items()):
                return False
            for p in primes:
                got = sum(c * Fraction(p) ** (e // 2) for e, c in poly.items())
                if got != lift_counts(lo, n, p).get(target, 0):
                    return False
    return True


# ---------------------------------------------------------------- Fock space through gamma

def linear_layer_action(layer, vec: dict) -> dict:
    """Zero representation of Z-graded dimension `layer` acting on Fock space.

    It is the ordered product of divided powers f_i^(d_i), lowest i leftmost;
    squares of f_i act by zero since content i occurs at most once among
    addable boxes.
    """
    d = dimvec_dict(layer)
    if any(c > 1 for c in d.values()):
        return {}
    out = {}
    for lam, c in vec.items():
        mu = lam
        for i in sorted(d, reverse=True):
            mu = _add_box(mu, i)
            if mu is None:
                break
        if mu is not None:
            vec_add(out, {mu: c})
    return out


def linear_product_action(flag, vec: dict) -> dict:
    """Ordered product of linear generators acting on Fock space, rightmost first."""
    w = dict(vec)
    for layer in reversed(flag):
        w = linear_layer_action(layer, w)
        if not w:
            return {}
    return w


def _lifts_in_range(dim, lo: int, hi: int):
    """0/1 Z-graded dimension vectors supported in [lo, hi] reducing to dim."""
    n = len(dim)
    per_class = [combinations([i for i in range(lo, hi + 1) if i % n == r], dim[r]) for r in range(n)]
    for choice in iproduct(*per_class):
        yield dimvec_from_dict(None, {i: 1 for part in choice for i in part})


def k_weight(d, lam, n: int) -> int:
    """Exponent of k_{d'} on |lam>, with d'_i = sum of d_j over j < i in the class of i."""
    d = dimvec_dict(d)
    add, rem = addable_removable(lam)
    total = 0
    for i in set(add) | set(rem):
        dp = sum(x for j, x in d.items() if j < i and (i - j) % n == 0)
        total += dp * (add.count(i) - rem.count(i))
    return total


def fock_action_via_gamma(u: HallVector, vec: dict) -> dict:
    """x|lam> = sum_d gamma_d(x) k_{d'} |lam>, d running over 0/1 lifts.

    Lifts with a coordinate >= 2 are skipped: f_i^(2) acts by zero.
    """
    n = u.n
    size = sum(u.dim)
    out: dict = {}
    for lam, c in vec.items():
        lo = -len(lam) - size
        hi = (lam[0] if lam else 0) + size
        for d in _lifts_in_range(tuple(u.dim), lo, hi):
            kexp = k_weight(d, lam, n)
            for flag, g in gamma_products(u, d).items():
                img = linear_product_action(flag, {lam: ONE})
                vec_add(out, img, c * g.shift(kexp))
    return {k: x for k, x in out.items() if x}
