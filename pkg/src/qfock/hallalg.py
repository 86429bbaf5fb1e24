"""Generic Hall algebra of nilpotent representations of a cyclic quiver
(or of the linear quiver on Z), built from finite-field counts.

Conventions: over a field with Q elements the structure constants are
polynomials in Q, and the generic algebra is obtained by Q -> v^2.
Elements are stored in the orbit basis f_O = v^{dim O} 1_O.  Products put
the left factor on the subrepresentation side.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct

from . import fqlinalg as fq
from .cache import active_cache
from .combinat import (
    Multisegment,
    closure_leq,
    dimvec_add,
    dimvec_dict,
    dimvec_from_dict,
    dimvec_size,
    enumerate_multisegments,
    format_multisegment,
    parse_multisegment,
)
from .laurent import ONE, ZERO, FitError, LaurentPolynomial, fit_polynomial_in_Q, poly_in_Q_to_laurent, vpow

DEFAULT_PRIMES = (2, 3, 5, 7, 11)
_EXTRA_PRIMES = (13, 17, 19, 23, 29, 31, 37, 41, 43, 47)
_primes = list(DEFAULT_PRIMES)


def set_primes(primes) -> None:
    """Choose the prime field sizes used for counting (cached results are dropped)."""
    ps = sorted(set(int(p) for p in primes))
    for p in ps:
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
    _primes[:] = ps
    clear_caches()


def get_primes() -> list[int]:
    return list(_primes)


def _primes_for(bound: int) -> list[int]:
    need = bound + 2
    ps = list(_primes)
    for p in _EXTRA_PRIMES:
        if len(ps) >= need:
            break
        if p > ps[-1]:
            ps.append(p)
    if len(ps) < need:
        raise FitError(f"not enough primes for degree bound {bound}")
    return ps[:need]


# ---------------------------------------------------------------- quiver geometry

def vertices(n, dv) -> list[int]:
    return list(range(n)) if n else sorted(dimvec_dict(dv))


def succ(n, i: int) -> int:
    return (i + 1) % n if n else i + 1


def pred(n, i: int) -> int:
    return (i - 1) % n if n else i - 1


def step(n, i: int, k: int) -> int:
    return (i + k) % n if n else i + k


def euler_m(n, b, a) -> int:
    """sum over arrows i -> i+1 of b_i a_{i+1}, plus sum_i b_i a_i."""
    bd, ad = dimvec_dict(b), dimvec_dict(a)
    arrows = sum(c * ad.get(succ(n, i), 0) for i, c in bd.items())
    return arrows + sum(c * ad.get(i, 0) for i, c in bd.items())


def zero_dim(n):
    return dimvec_from_dict(n, {})


class Representation:
    """Explicit matrices for the representative of an orbit over GF(p)."""

    def __init__(self, ms: Multisegment, p: int):
        self.ms, self.p, self.n = ms, p, ms.n
        vert_of = []
        arrows = []
        for s, length in ms.segments():
            base = len(vert_of)
            for t in range(length):
                vert_of.append(step(ms.n, s, t))
                if t + 1 < length:
                    arrows.append((base + t, base + t + 1))
        self.dim = len(vert_of)
        self.vertex_of = vert_of
        self.verts = vertices(ms.n, ms.dim_vector())
        self.basis = {i: [self._e(t) for t in range(self.dim) if vert_of[t] == i] for i in self.verts}
        # x as a map on column vectors: x(e_t) = e_{t+1}
        self._next = dict(arrows)

    def _e(self, t):
        e = [0] * self.dim
        e[t] = 1
        return e

    def apply(self, vec, k: int = 1):
        for _ in range(k):
            out = [0] * self.dim
            for t, a in enumerate(vec):
                if a and t in self._next:
                    out[self._next[t]] = (out[self._next[t]] + a) % self.p
            vec = out
        return vec

    def kernel_basis(self, i: int):
        """Basis of ker x inside the vertex-i space."""
        return [e for e in self.basis[i] if not any(self.apply(e))]

    def is_stable(self, sub: dict) -> bool:
        for i in self.verts:
            j = succ(self.n, i)
            imgs = [self.apply(b) for b in sub.get(i, [])]
            imgs = [w for w in imgs if any(w)]
            if not imgs:
                continue
            target = sub.get(j, [])
            if fq.rank_mod(target + imgs, self.p) != len(target):
                return False
        return True

    def classify_sub(self, sub: dict) -> Multisegment:
        def rank(i, k):
            return fq.rank_mod([self.apply(b, k) for b in sub.get(i, [])], self.p)
        return multisegment_from_ranks(self.n, self.verts, rank, self.dim)

    def classify_quotient(self, sub: dict) -> Multisegment:
        def rank(i, k):
            tgt = sub.get(step(self.n, i, k), [])
            imgs = [self.apply(e, k) for e in self.basis.get(i, [])]
            return fq.rank_mod(imgs + tgt, self.p) - len(tgt)
        return multisegment_from_ranks(self.n, self.verts, rank, self.dim)


def multisegment_from_ranks(n, verts, rank, depth: int) -> Multisegment:
    """Recover a multisegment from the ranks of x^k from vertex i."""
    vs = set(verts)
    memo = {}

    def r(i, k):
        if n is None and i not in vs:
            return 0
        key = (i, k)
        if key not in memo:
            memo[key] = rank(i, k)
        return memo[key]

    def starts(i, k):
        return r(i, k) - r(pred(n, i), k + 1)

    segs = []
    for i in verts:
        for length in range(1, depth + 1):
            m = starts(i, length - 1) - starts(i, length)
            if m < 0:
                raise ArithmeticError("inconsistent rank data")
            segs.extend([(i, length)] * m)
    return Multisegment.from_segments(n, segs)


# ---------------------------------------------------------------- counting

def _graded_subspaces(rep: Representation, ambient: dict, dims: dict):
    verts = [i for i in rep.verts if dims.get(i, 0)]
    pools = [list(fq.subspaces(ambient[i], dims[i], rep.p)) for i in verts]
    for choice in iproduct(*pools):
        yield dict(zip(verts, choice))


@lru_cache(maxsize=None)
def kernel_quotient_counts(ms: Multisegment, layer, p: int) -> tuple:
    """Count subspaces S of ker x with dimension ``layer`` by the class of V/S."""
    rep = Representation(ms, p)
    dims = dimvec_dict(layer)
    kers = {i: rep.kernel_basis(i) for i in rep.verts}
    if any(dims.get(i, 0) > len(kers.get(i, [])) for i in dims):
        return ()
    out: dict = {}
    for sub in _graded_subspaces(rep, kers, dims):
        q = rep.classify_quotient(sub)
        out[q] = out.get(q, 0) + 1
    return tuple(sorted(out.items()))


@lru_cache(maxsize=None)
def sub_quotient_counts(ms: Multisegment, sub_dim, p: int) -> tuple:
    """Count x-stable subspaces of dimension ``sub_dim`` by (class of U, class of V/U)."""
    rep = Representation(ms, p)
    dims = dimvec_dict(sub_dim)
    if any(dims.get(i, 0) > len(rep.basis.get(i, [])) for i in dims):
        return ()
    out: dict = {}
    for sub in _graded_subspaces(rep, rep.basis, dims):
        if not rep.is_stable(sub):
            continue
        key = (rep.classify_sub(sub), rep.classify_quotient(sub))
        out[key] = out.get(key, 0) + 1
    return tuple(sorted(out.items()))


def _fit_table(fn, bound: int) -> dict:
    ps = _primes_for(bound)
    tables = [dict(fn(p)) for p in ps]
    keys = set().union(*tables)
    out = {}
    for key in keys:
        coeffs = fit_polynomial_in_Q({p: t.get(key, 0) for p, t in zip(ps, tables)}, bound)
        poly = poly_in_Q_to_laurent(coeffs)
        if poly:
            out[key] = poly
    return out


def _cached_fit(kind: str, ms: Multisegment, dims: dict, compute) -> dict:
    """Fitted table, read from or written to the disk cache when one is active."""
    cache = active_cache()
    if cache is None:
        return compute()
    key = [kind, ms.n, format_multisegment(ms), sorted([i, c] for i, c in dims.items())]
    stored = cache.get("fit", key)
    if stored is not None:
        try:
            return {_decode_key(ms.n, k): LaurentPolynomial.from_json(c) for k, c in stored}
        except (ValueError, TypeError, KeyError):
            pass
    table = compute()
    cache.put("fit", key, [[_encode_key(k), c.to_json()] for k, c in sorted(table.items(), key=str)])
    return table


def _encode_key(k):
    if isinstance(k, Multisegment):
        return format_multisegment(k)
    return [format_multisegment(x) for x in k]


def _decode_key(n, k):
    if isinstance(k, str):
        return parse_multisegment(k, n)
    return tuple(parse_multisegment(x, n) for x in k)


@lru_cache(maxsize=None)
def kernel_quotient_polys(ms: Multisegment, layer) -> dict:
    dims = dimvec_dict(layer)
    kdim = {i: ms.kernel_dim(i, 1) for i in vertices(ms.n, ms.dim_vector())}
    bound = sum(c * (kdim.get(i, 0) - c) for i, c in dims.items())
    if any(c > kdim.get(i, 0) for i, c in dims.items()):
        return {}
    return _cached_fit("kernel", ms, dims,
                       lambda: _fit_table(lambda p: kernel_quotient_counts(ms, layer, p), max(bound, 0)))


@lru_cache(maxsize=None)
def sub_quotient_polys(ms: Multisegment, sub_dim) -> dict:
    dims = dimvec_dict(sub_dim)
    total = dimvec_dict(ms.dim_vector())
    if any(c > total.get(i, 0) for i, c in dims.items()):
        return {}
    bound = sum(c * (total.get(i, 0) - c) for i, c in dims.items())
    return _cached_fit("sub", ms, dims,
                       lambda: _fit_table(lambda p: sub_quotient_counts(ms, sub_dim, p), max(bound, 0)))


def normalize_flag(flag) -> tuple:
    return tuple(layer for layer in flag if dimvec_size(layer))


def flag_dim(n, flag):
    total = zero_dim(n)
    for layer in flag:
        total = dimvec_add(n, total, layer)
    return total


def count_stable_flags(flag, ms: Multisegment, Q: int) -> int:
    """Number of flags F^1 < ... < F^r = V of the given layer dimensions with x(F^k) in F^(k-1)."""
    return _count_flags(normalize_flag(flag), ms, Q)


@lru_cache(maxsize=None)
def _count_flags(flag: tuple, ms: Multisegment, Q: int) -> int:
    if not flag:
        return 1 if ms.total_dim() == 0 else 0
    if flag_dim(ms.n, flag) != ms.dim_vector():
        return 0
    total = 0
    for quot, c in kernel_quotient_counts(ms, flag[0], Q):
        total += c * _count_flags(flag[1:], quot, Q)
    return total


@lru_cache(maxsize=None)
def flag_count_poly(flag: tuple, ms: Multisegment) -> LaurentPolynomial:
    """Number of stable flags as a polynomial in v (with Q = v^2)."""
    flag = normalize_flag(flag)
    if not flag:
        return ONE if ms.total_dim() == 0 else ZERO
    if flag_dim(ms.n, flag) != ms.dim_vector():
        return ZERO
    total = ZERO
    for quot, poly in kernel_quotient_polys(ms, flag[0]).items():
        total = total + poly * flag_count_poly(flag[1:], quot)
    return total


def clear_caches() -> None:
    for fn in (kernel_quotient_counts, sub_quotient_counts, kernel_quotient_polys,
               sub_quotient_polys, _count_flags, flag_count_poly, orbit_in_monomials,
               _bar_matrix, hall_canonical, _orbit_product):
        fn.cache_clear()


# ---------------------------------------------------------------- elements

class HallVector:
    """Element of the generic Hall algebra, homogeneous of one dimension vector."""

    __slots__ = ("n", "dim", "coeffs")

    def __init__(self, n, dim, coeffs=None):
        self.n = n
        self.dim = dim
        self.coeffs = {}
        for ms, c in (coeffs or {}).items():
            c = LaurentPolynomial.coerce(c)
            if ms.dim_vector() != dim:
                raise ValueError(f"{ms} has the wrong dimension vector")
            if c:
                self.coeffs[ms] = c

    @classmethod
    def orbit(cls, ms: Multisegment) -> "HallVector":
        return cls(ms.n, ms.dim_vector(), {ms: ONE})

    @classmethod
    def zero(cls, n, dim) -> "HallVector":
        return cls(n, dim, {})

    def coeff(self, ms) -> LaurentPolynomial:
        return self.coeffs.get(ms, ZERO)

    def _check(self, other):
        if self.n != other.n or self.dim != other.dim:
            raise ValueError("elements live in different graded pieces")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for ms, c in other.coeffs.items():
            out[ms] = out.get(ms, ZERO) + c
        return HallVector(self.n, self.dim, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "HallVector":
        c = LaurentPolynomial.coerce(c)
        return HallVector(self.n, self.dim, {ms: x * c for ms, x in self.coeffs.items()})

    def __eq__(self, other):
        return (isinstance(other, HallVector) and self.n == other.n and self.dim == other.dim
                and self.coeffs == other.coeffs)

    def __mul__(self, other):
        return hall_product(self, other)

    def __repr__(self):
        body = " + ".join(f"({c})*f[{ms}]" for ms, c in sorted(self.coeffs.items()))
        return f"HallVector({body or '0'})"

    def is_zero(self) -> bool:
        return not self.coeffs


def generator(n, dim) -> HallVector:
    """f_d: the orbit of the zero representation of dimension d."""
    ms = Multisegment.from_segments(n, [(i, 1) for i, c in dimvec_dict(dim).items() for _ in range(c)])
    return HallVector.orbit(ms)


@lru_cache(maxsize=None)
def _orbit_product(a: Multisegment, b: Multisegment) -> tuple:
    n = a.n
    adim, bdim = a.dim_vector(), b.dim_vector()
    total = dimvec_add(n, adim, bdim)
    scale = a.orbit_dim() + b.orbit_dim() - euler_m(n, bdim, adim)
    out = []
    for target in enumerate_multisegments(n, total):
        poly = sub_quotient_polys(target, adim).get((a, b))
        if poly:
            out.append((target, poly.shift(scale - target.orbit_dim())))
    return tuple(out)


def hall_product(f: HallVector, g: HallVector) -> HallVector:
    """f o g with f on the subrepresentation side."""
    if f.n != g.n:
        raise ValueError("different quivers")
    total = dimvec_add(f.n, f.dim, g.dim)
    out: dict = {}
    for a, ca in f.coeffs.items():
        for b, cb in g.coeffs.items():
            c = ca * cb
            for target, poly in _orbit_product(a, b):
                out[target] = out.get(target, ZERO) + c * poly
    return HallVector(f.n, total, out)


def flag_monomial(n, flag) -> HallVector:
    """The function counting x-stable flags of the given type, in the orbit basis."""
    flag = normalize_flag(flag)
    dim = flag_dim(n, flag)
    out = {}
    for ms in enumerate_multisegments(n, dim):
        c = flag_count_poly(flag, ms)
        if c:
            out[ms] = c.shift(-ms.orbit_dim())
    return HallVector(n, dim, out)


def flag_twist(n, flag) -> int:
    """M with flag_monomial = v^M * (ordered product of the generators f_{d^k})."""
    flag = normalize_flag(flag)
    total = 0
    for k in range(len(flag) - 1):
        rest = flag_dim(n, flag[k + 1:])
        total += euler_m(n, rest, flag[k])
    return total


def generator_product(n, flag) -> HallVector:
    """Ordered product f_{d^1} o f_{d^2} o ... computed with ``hall_product``."""
    flag = normalize_flag(flag)
    if not flag:
        return HallVector.orbit(Multisegment(n, ()))
    out = generator(n, flag[0])
    for layer in flag[1:]:
        out = hall_product(out, generator(n, layer))
    return out


def _kernel_order_key(ms: Multisegment):
    return (ms.orbit_dim(), str(ms))


@lru_cache(maxsize=None)
def orbit_in_monomials(ms: Multisegment) -> tuple:
    """Write 1_O as a combination of flag functions: tuple of (flag, coeff).

    Uses the flag of kernels of powers of x, which counts to 1 on O itself
    and is supported on orbits with larger kernels.
    """
    n = ms.n
    flag = ms.jordan_flag_type()
    terms = {flag: ONE}
    fm = flag_monomial(n, flag)
    lead = fm.coeff(ms).shift(ms.orbit_dim())
    if lead != ONE:
        raise ArithmeticError(f"kernel flag of {ms} does not count to one")
    for other, c in fm.coeffs.items():
        if other == ms:
            continue
        if not all(other.kernel_dim(i, k) >= ms.kernel_dim(i, k)
                   for i in vertices(n, ms.dim_vector()) for k in range(1, ms.total_dim() + 1)):
            raise ArithmeticError("flag support is not triangular")
        count = c.shift(other.orbit_dim())
        for fl, d in orbit_in_monomials(other):
            terms[fl] = terms.get(fl, ZERO) - count * d
    return tuple((fl, c) for fl, c in terms.items() if c)


def orbit_as_flags(f: HallVector) -> dict:
    """Coefficients of f on flag functions."""
    out: dict = {}
    for ms, c in f.coeffs.items():
        scale = c.shift(ms.orbit_dim())
        for fl, d in orbit_in_monomials(ms):
            out[fl] = out.get(fl, ZERO) + scale * d
    return {fl: c for fl, c in out.items() if c}


def orbit_as_generator_products(f: HallVector) -> dict:
    """Coefficients of f on ordered products of generators f_{d^1} o ... o f_{d^r}."""
    return {fl: c.shift(flag_twist(f.n, fl)) for fl, c in orbit_as_flags(f).items()}


def flags_to_orbits(n, dim, flags: dict) -> HallVector:
    out = HallVector.zero(n, dim)
    for fl, c in flags.items():
        out = out + flag_monomial(n, fl).scale(c)
    return out


def hall_bar(f: HallVector) -> HallVector:
    """The bar involution: semilinear, fixes every generator f_d."""
    prods = orbit_as_generator_products(f)
    flags = {fl: c.bar().shift(-flag_twist(f.n, fl)) for fl, c in prods.items()}
    return flags_to_orbits(f.n, f.dim, flags)


# ---------------------------------------------------------------- canonical basis

def linear_extension(orbits) -> list:
    """Orbits sorted so that closure-smaller orbits come first."""
    return sorted(orbits, key=_kernel_order_key)


@lru_cache(maxsize=None)
def _bar_matrix(n, dim) -> tuple:
    """bar(g_O) in the basis g_O = v^{-2 dim O} f_O, columns indexed by orbits."""
    orbits = linear_extension(enumerate_multisegments(n, dim))
    cols = {}
    for ms in orbits:
        img = hall_bar(HallVector.orbit(ms))
        col = {}
        for other, c in img.coeffs.items():
            col[other] = c.shift(2 * ms.orbit_dim() + 2 * other.orbit_dim())
        cols[ms] = col
    return tuple(orbits), cols


class TriangularityError(ArithmeticError):
    pass


def canonical_from_involution(order: list, cols: dict, leq, positive: bool) -> dict:
    """Solve for the bar-invariant basis of a unitriangular involution.

    ``cols[b][a]`` is the coefficient of basis vector a in bar(b).  Returns
    ``{b: {a: p_ab}}`` with p_bb = 1 and, for a below b, p_ab in vZ[v]
    (``positive``) or in v^-1 Z[v^-1].
    """
    pos = {b: k for k, b in enumerate(order)}
    for b, col in cols.items():
        for a, c in col.items():
            if a == b:
                if c != ONE:
                    raise TriangularityError(f"diagonal entry {c} at {b}")
            elif pos[a] > pos[b] or not leq(a, b):
                raise TriangularityError(f"involution is not triangular at ({a}, {b})")
    out = {}
    for b in order:
        p = {b: ONE}
        for a in reversed(order[: pos[b]]):
            if not leq(a, b):
                continue
            rhs = ZERO
            for c_, pc in p.items():
                if c_ != a:
                    entry = cols[c_].get(a)
                    if entry:
                        rhs = rhs + entry * pc.bar()
            if not rhs:
                continue
            if not rhs.is_bar_antisymmetric():
                raise TriangularityError(f"residual {rhs} at ({a}, {b}) is not antisymmetric")
            val = rhs.positive_part() if positive else rhs.negative_part()
            if val:
                p[a] = val
        out[b] = p
    return out


@lru_cache(maxsize=None)
def hall_canonical(ms: Multisegment) -> HallVector:
    """The bar-invariant canonical element indexed by the orbit ``ms``.

    It equals g_O plus terms v^-1 Z[v^-1] g_O' for O' in the closure of O,
    where g_O = v^{-2 dim O} f_O; see ``hall_canonical_f_normalized``.
    """
    order, cols = _bar_matrix(ms.n, ms.dim_vector())
    sol = canonical_from_involution(list(order), cols, closure_leq, positive=False)
    col = sol[ms]
    return HallVector(ms.n, ms.dim_vector(), {a: c.shift(-2 * a.orbit_dim()) for a, c in col.items()})


def hall_canonical_f_normalized(ms: Multisegment) -> HallVector:
    """v^{2 dim O} times the canonical element: f_O plus v Z[v] f_O' terms."""
    return hall_canonical(ms).scale(vpow(2 * ms.orbit_dim()))


def is_bar_fixed(f: HallVector) -> bool:
    return hall_bar(f) == f
