"""Canonical bases of the q-deformed Fock space and of finite wedge spaces.

Two constructions are provided: the triangular algorithm driven by the
involution psi (bases B+ and B-), and the image of the Hall algebra
canonical basis acting on the vacuum (basis B).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .combinat import (
    beta_word,
    conjugate,
    dominates,
    format_partition,
    order_key,
    orbit_of_partition,
    partition_of_word,
    partitions,
)
from .hallalg import HallVector, canonical_from_involution, hall_canonical, orbit_as_generator_products
from .heckewedge import (
    StraighteningError,
    f_alpha_fock,
    f_alpha_wedge,
    psi_finite,
    psi_semiinfinite,
    vec_add,
    vec_clean,
)
from .laurent import ONE, ZERO, LaurentPolynomial


class InternalError(RuntimeError):
    """An invariant that the theory guarantees has failed."""


# ---------------------------------------------------------------- spaces

class WedgeSpace:
    """Fock space (``l=None``) or the finite wedge space of length l, level n.

    Vectors are dictionaries keyed by partitions.
    """

    def __init__(self, n: int, l: int | None = None):
        if n < 2:
            raise ValueError("n must be at least 2")
        self.n, self.l = n, l

    def partitions(self, weight: int) -> list:
        parts = partitions(weight) if self.l is None else partitions(weight, None, self.l)
        return sorted(parts, key=order_key, reverse=True)

    def vacuum(self) -> dict:
        return {(): ONE}

    def f_alpha(self, alpha, vec: dict) -> dict:
        if self.l is None:
            return f_alpha_fock(alpha, vec, self.n)
        words = {beta_word(lam, self.l): c for lam, c in vec.items()}
        return self._to_partitions(f_alpha_wedge(alpha, words, self.n))

    def psi(self, vec: dict) -> dict:
        if self.l is None:
            return psi_semiinfinite(vec, self.n)
        words = {beta_word(lam, self.l): c for lam, c in vec.items()}
        return self._to_partitions(psi_finite(words, self.n))

    def _to_partitions(self, vec):
        out = {}
        for w, c in vec.items():
            lam = partition_of_word(w)
            if lam is None:
                raise InternalError(f"word {w} left the space of partitions")
            out[lam] = c
        return out


def column_alphas(lam, n: int) -> list[tuple]:
    """Residue contents of the columns of lam, longest column first."""
    out = []
    for j, height in enumerate(conjugate(lam)):
        a = [0] * n
        for r in range(height):
            a[(j - r) % n] += 1
        out.append(tuple(a))
    return out


def column_seed(lam, space: WedgeSpace) -> dict:
    """psi-invariant vector f_{alpha_k} ... f_{alpha_1} |empty>, with leading term |lam>."""
    vec = space.vacuum()
    for alpha in column_alphas(lam, space.n):
        vec = space.f_alpha(alpha, vec)
    return vec


def hall_fock_action(u: HallVector, vec: dict, space: WedgeSpace) -> dict:
    """Act by a Hall algebra element through its expansion in generator products.

    In a product f_{d^1} o ... o f_{d^r} the rightmost factor acts first.
    """
    if u.n != space.n:
        raise ValueError("element and space have different levels")
    out: dict = {}
    for flag, c in orbit_as_generator_products(u).items():
        w = dict(vec)
        for layer in reversed(flag):
            w = space.f_alpha(layer, w)
            if not w:
                break
        vec_add(out, w, c)
    return out


# ---------------------------------------------------------------- basis tables

@dataclass
class BasisTable:
    """Columns b_lam = sum_mu entry(mu, lam) |mu> of a basis of one weight space."""
    n: int
    l: int | None
    weight: int
    kind: str
    order: list
    columns: dict = field(default_factory=dict)

    def entry(self, mu, lam) -> LaurentPolynomial:
        return self.columns[tuple(lam)].get(tuple(mu), ZERO)

    def matrix(self) -> list[list[LaurentPolynomial]]:
        """Rows and columns follow ``order`` (largest partition first)."""
        return [[self.entry(mu, lam) for lam in self.order] for mu in self.order]

    def at_one(self) -> list[list[int]]:
        return [[c.eval_at_one() for c in row] for row in self.matrix()]

    def is_unitriangular(self) -> bool:
        for lam in self.order:
            col = self.columns[lam]
            if col.get(lam) != ONE:
                return False
            if any(mu != lam and not dominates(lam, mu) for mu in col):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "weight": self.weight,
            "kind": self.kind,
            "order": [list(p) for p in self.order],
            "columns": {
                format_partition(lam): {format_partition(mu): c.to_json() for mu, c in sorted(col.items(), reverse=True)}
                for lam, col in self.columns.items()
            },
        }


def _triangular_correction(lam, seed: dict, done: dict, positive: bool) -> dict:
    vec = dict(seed)
    lead = vec.get(lam)
    if lead != ONE or any(mu != lam and not dominates(lam, mu) for mu in vec):
        raise InternalError(f"seed for {lam} is not unitriangular")
    # walk down the total order; coefficients of larger partitions are final
    pending = sorted((m for m in done if order_key(m) < order_key(lam)), key=order_key, reverse=True)
    for mu in pending:
        c = vec.get(mu)
        if not c:
            continue
        bad = c.negative_part() + c.coeff(0) if positive else c.positive_part() + c.coeff(0)
        if not bad:
            continue
        sym = bad + (bad.negative_part().bar() if positive else bad.positive_part().bar())
        vec_add(vec, done[mu], -sym)
    return vec_clean(vec)


def lt_basis(weight: int, n: int, kind: str = "+", l: int | None = None, check: bool = True) -> BasisTable:
    """The psi-invariant basis with off-diagonal entries in vZ[v] (``+``) or v^-1 Z[v^-1] (``-``)."""
    if kind not in "+-" or len(kind) != 1:
        raise ValueError("kind must be '+' or '-'")
    space = WedgeSpace(n, l)
    order = space.partitions(weight)
    done: dict = {}
    for lam in reversed(order):
        done[lam] = _triangular_correction(lam, column_seed(lam, space), done, kind == "+")
    table = BasisTable(n, l, weight, kind, order, {lam: done[lam] for lam in order})
    if check:
        check_basis(table, space)
    return table


def check_basis(table: BasisTable, space: WedgeSpace | None = None) -> None:
    space = space or WedgeSpace(table.n, table.l)
    if not table.is_unitriangular():
        raise InternalError("basis is not unitriangular")
    for lam, col in table.columns.items():
        if space.psi(col) != col:
            raise InternalError(f"column {lam} is not psi-invariant")
        for mu, c in col.items():
            if mu == lam:
                continue
            if table.kind == "+" and not c.in_positive_span():
                raise InternalError(f"entry ({mu},{lam}) = {c} outside vZ[v]")
            if table.kind == "-" and not c.in_negative_span():
                raise InternalError(f"entry ({mu},{lam}) = {c} outside v^-1 Z[v^-1]")


def lt_basis_from_psi_matrix(weight: int, n: int, kind: str = "+", l: int | None = None) -> BasisTable:
    """Same basis, solved directly from the matrix of psi on the standard basis."""
    space = WedgeSpace(n, l)
    order = space.partitions(weight)
    cols = {lam: space.psi({lam: ONE}) for lam in order}
    sol = canonical_from_involution(list(reversed(order)), cols, lambda a, b: dominates(b, a), kind == "+")
    return BasisTable(n, l, weight, kind, order, {lam: sol[lam] for lam in order})


def hall_basis(weight: int, n: int, l: int | None = None, check: bool = True) -> BasisTable:
    """Images of the Hall canonical elements of the orbits O_lam on the vacuum."""
    space = WedgeSpace(n, l)
    order = space.partitions(weight)
    cols = {}
    for lam in order:
        b = hall_canonical(orbit_of_partition(lam, n))
        cols[lam] = vec_clean(hall_fock_action(b, space.vacuum(), space))
    table = BasisTable(n, l, weight, "hall", order, cols)
    if check:
        if not table.is_unitriangular():
            raise InternalError("Hall basis is not unitriangular")
        for lam, col in cols.items():
            if space.psi(col) != col:
                raise InternalError(f"Hall column {lam} is not psi-invariant")
    return table


def compare_bases(a: BasisTable, b: BasisTable) -> list:
    """Entries where two tables differ, as (mu, lam, a_entry, b_entry)."""
    if a.order != b.order:
        raise ValueError("tables index different partitions")
    diffs = []
    for lam in a.order:
        for mu in a.order:
            x, y = a.entry(mu, lam), b.entry(mu, lam)
            if x != y:
                diffs.append((mu, lam, x, y))
    return diffs


def inversion_check(weight: int, n: int) -> bool:
    """Duality between B+ and B- under transposition of partitions.

    With E[lam][mu] = e+_{mu lam} (coefficient of |mu> in b+_lam) and
    F[lam][mu] = bar e-_{lam' mu'} (coefficient of |lam'> in b-_{mu'}),
    the product E F is the identity matrix.
    """
    plus = lt_basis(weight, n, "+", check=False)
    minus = lt_basis(weight, n, "-", check=False)
    order = plus.order
    for lam in order:
        for nu in order:
            total = ZERO
            for mu in order:
                a = plus.entry(mu, lam)
                if a:
                    total = total + a * minus.entry(conjugate(mu), conjugate(nu)).bar()
            if total != (ONE if lam == nu else ZERO):
                return False
    return True


def decomposition_matrix(weight: int, n: int) -> tuple[list, list[list[int]]]:
    """Entries of B+ at v = 1, rows mu and columns lam in the shared order."""
    table = lt_basis(weight, n, "+")
    return table.order, table.at_one()
