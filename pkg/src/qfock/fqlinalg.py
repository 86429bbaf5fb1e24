"""Small dense linear algebra over prime fields, and subspace enumeration."""
from __future__ import annotations

from itertools import combinations, product


def rank_mod(rows, p: int) -> int:
    """Rank of a list of row vectors over GF(p)."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        prow = [(a * inv) % p for a in m[rank]]
        m[rank] = prow
        for r in range(len(m)):
            if r != rank and m[r][col] % p:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], prow)]
        rank += 1
        if rank == len(m):
            break
    return rank


def nullspace_mod(rows, ncols: int, p: int) -> list[list[int]]:
    """Basis of {x : rows . x = 0} over GF(p)."""
    m = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col] % p:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(a * inv) % p for a in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] % p:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [0] * ncols
        x[fc] = 1
        for r, pc in enumerate(pivots):
            x[pc] = (-m[r][fc]) % p
        basis.append(x)
    return basis


def mat_vec(mat, vec, p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, vec)) % p for row in mat]


def mat_mul(a, b, p: int):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % p for col in bt] for row in a]


def subspaces(ambient: list[list[int]], k: int, p: int):
    """Yield bases of all k-dimensional subspaces of span(ambient).

    ``ambient`` must be linearly independent; subspaces are produced from
    reduced row echelon coefficient matrices, so each appears once.
    """
    m = len(ambient)
    if k == 0:
        yield []
        return
    if k > m:
        return
    dim = len(ambient[0]) if ambient else 0
    for pivots in combinations(range(m), k):
        free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, m) if c not in pivots]
        for vals in product(range(p), repeat=len(free)):
            coef = [[0] * m for _ in range(k)]
            for r, pc in enumerate(pivots):
                coef[r][pc] = 1
            for (r, c), val in zip(free, vals):
                coef[r][c] = val
            yield [
                [sum(coef[r][j] * ambient[j][t] for j in range(m)) % p for t in range(dim)]
                for r in range(k)
            ]


def gaussian_binomial(m: int, k: int, q: int) -> int:
    if k < 0 or k > m:
        return 0
    num = den = 1
    for j in range(k):
        num *= q ** (m - j) - 1
        den *= q ** (j + 1) - 1
    return num // den
