"""Combinatorics: partitions, residues, affine permutations, multisegments."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator

Partition = tuple


# ---------------------------------------------------------------- partitions

def is_partition(lam) -> bool:
    return all(isinstance(p, int) and p > 0 for p in lam) and all(
        lam[k] >= lam[k + 1] for k in range(len(lam) - 1)
    )


def normalize_partition(lam) -> Partition:
    lam = tuple(int(p) for p in lam if p)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    return lam


@lru_cache(maxsize=None)
def partitions(weight: int, max_part: int | None = None, max_len: int | None = None) -> tuple:
    """All partitions of ``weight`` in decreasing lexicographic order."""
    if weight == 0:
        return ((),)
    if max_len == 0:
        return ()
    if max_part is None or max_part > weight:
        max_part = weight
    out = []
    for first in range(max_part, 0, -1):
        rest = partitions(weight - first, first, None if max_len is None else max_len - 1)
        out.extend((first,) + r for r in rest)
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def dominates(lam: Partition, mu: Partition) -> bool:
    """True if ``mu <= lam`` in dominance order (same weight assumed)."""
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if b > a:
            return False
    return a == b


def dominance_leq(mu: Partition, lam: Partition) -> bool:
    if sum(mu) != sum(lam):
        raise ValueError("dominance compares partitions of equal weight")
    return dominates(lam, mu)


def order_key(lam: Partition):
    """Key for the total order used throughout (lexicographic, refining dominance)."""
    return tuple(lam)


def sort_partitions(parts, descending: bool = True) -> list:
    return sorted(parts, key=order_key, reverse=descending)


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()[]")
    if not text:
        return ()
    return normalize_partition(int(t) for t in text.split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "()"


# ---------------------------------------------------------------- residues

def residue(i: int, n: int) -> int:
    return i % n


def window_rep(i: int, n: int) -> int:
    """Representative of i mod n in the window {1-n, ..., 0}."""
    return -((-i) % n)


def contents(lam: Partition) -> list[int]:
    """Contents (column minus row) of the boxes of ``lam``."""
    return [c - r for r, row in enumerate(lam) for c in range(row)]


def content_vector(lam: Partition) -> dict:
    """Number of boxes of each content."""
    out: dict = {}
    for c in contents(lam):
        out[c] = out.get(c, 0) + 1
    return out


def residue_content(lam: Partition, n: int) -> tuple:
    d = [0] * n
    for c in contents(lam):
        d[c % n] += 1
    return tuple(d)


def beta_word(lam: Partition, length: int) -> tuple:
    """Strictly decreasing word lam_k + 1 - k for k = 1..length."""
    if len(lam) > length:
        raise ValueError(f"{lam} has more than {length} parts")
    return tuple((lam[k] if k < len(lam) else 0) + 1 - (k + 1) for k in range(length))


def partition_of_word(word) -> Partition | None:
    """Inverse of ``beta_word``; None if the word does not come from a partition."""
    lam = [w - 1 + (k + 1) for k, w in enumerate(word)]
    if any(lam[k] < lam[k + 1] for k in range(len(lam) - 1)) or (lam and lam[-1] < 0):
        return None
    return tuple(p for p in lam if p)


def addable_removable(lam: Partition) -> tuple[list[int], list[int]]:
    """Contents of the addable and of the removable boxes."""
    add, rem = [], []
    rows = list(lam) + [0]
    for r, row in enumerate(rows):
        if r == 0 or rows[r - 1] > row:
            add.append(row - r)
        if row > 0 and (r + 1 >= len(rows) or rows[r + 1] < row):
            rem.append(row - 1 - r)
    return add, rem


def indent_count(lam: Partition, i: int) -> int:
    """Addable minus removable boxes of content i."""
    add, rem = addable_removable(lam)
    return add.count(i) - rem.count(i)


@dataclass(frozen=True)
class ResidueData:
    """Addable/removable statistics of a partition for one residue class."""
    partition: Partition
    n: int

    def count(self, i: int) -> int:
        return indent_count(self.partition, i)

    def relevant_contents(self) -> list[int]:
        add, rem = addable_removable(self.partition)
        return sorted(set(add) | set(rem))

    def above(self, i: int) -> int:
        """Sum of counts over contents j > i with j = i mod n."""
        return sum(self.count(j) for j in self.relevant_contents() if j > i and (j - i) % self.n == 0)

    def below(self, i: int) -> int:
        return sum(self.count(j) for j in self.relevant_contents() if j < i and (j - i) % self.n == 0)

    def total(self, r: int) -> int:
        """Sum of counts over the whole residue class r."""
        return sum(self.count(j) for j in self.relevant_contents() if (j - r) % self.n == 0)


def residue_data(lam: Partition, n: int) -> ResidueData:
    return ResidueData(tuple(lam), n)


# ---------------------------------------------------------------- affine permutations

class AffinePermutation:
    """Bijection w of Z with w(k + l) = w(k) + l, stored by its window w(1..l).

    The product ``x * y`` is composition ``x o y``; words are acted on from
    the right by ``(word) w = word o w`` where a word i satisfies
    ``i(k + l) = i(k) + n``.
    """

    __slots__ = ("window", "l")

    def __init__(self, window):
        window = tuple(int(a) for a in window)
        l = len(window)
        if sorted(a % l for a in window) != list(range(l)):
            raise ValueError(f"{window} is not an affine permutation window")
        self.window = window
        self.l = l

    @classmethod
    def identity(cls, l: int) -> "AffinePermutation":
        return cls(range(1, l + 1))

    @classmethod
    def simple(cls, j: int, l: int) -> "AffinePermutation":
        w = list(range(1, l + 1))
        if j == 0:
            w[0], w[-1] = 0, l + 1
        else:
            w[j - 1], w[j] = w[j], w[j - 1]
        return cls(w)

    @classmethod
    def rotation(cls, l: int, power: int = 1) -> "AffinePermutation":
        return cls(k + power for k in range(1, l + 1))

    @classmethod
    def translation(cls, shifts) -> "AffinePermutation":
        l = len(shifts)
        return cls(k + 1 + l * s for k, s in enumerate(shifts))

    def __call__(self, k: int) -> int:
        q, r = divmod(k - 1, self.l)
        return self.window[r] + q * self.l

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        return AffinePermutation(self(other(k)) for k in range(1, self.l + 1))

    def inverse(self) -> "AffinePermutation":
        inv = [0] * self.l
        for k, a in enumerate(self.window, start=1):
            q, r = divmod(a - 1, self.l)
            inv[r] = k - q * self.l
        return AffinePermutation(inv)

    def __eq__(self, other):
        return isinstance(other, AffinePermutation) and self.window == other.window

    def __hash__(self):
        return hash(self.window)

    def __repr__(self):
        return f"AffinePermutation({list(self.window)})"

    @property
    def rotation_power(self) -> int:
        return (sum(self.window) - self.l * (self.l + 1) // 2) // self.l

    def coxeter_part(self) -> "AffinePermutation":
        """The factor x with self = x * rotation**p."""
        return self * AffinePermutation.rotation(self.l, -self.rotation_power)

    def length(self) -> int:
        w, l = self.window, self.l
        return sum(abs((w[j] - w[i]) // l) for i in range(l) for j in range(i + 1, l))

    def has_right_descent(self, j: int) -> bool:
        if j == 0:
            return self(0) > self(1)
        return self(j) > self(j + 1)

    def has_left_descent(self, j: int) -> bool:
        return self.inverse().has_right_descent(j)

    def right_descents(self) -> list[int]:
        return [j for j in range(self.l) if self.has_right_descent(j)]

    def left_descents(self) -> list[int]:
        inv = self.inverse()
        return [j for j in range(self.l) if inv.has_right_descent(j)]

    def times_simple(self, j: int) -> "AffinePermutation":
        return self * AffinePermutation.simple(j, self.l)

    def simple_times(self, j: int) -> "AffinePermutation":
        return AffinePermutation.simple(j, self.l) * self

    def reduced_word(self) -> tuple[int, tuple]:
        """(rotation power p, word) with self = s_word * rotation**p."""
        p = self.rotation_power
        x = self.coxeter_part()
        word = []
        while x.length():
            j = x.right_descents()[0]
            word.append(j)
            x = x.times_simple(j)
        return p, tuple(reversed(word))


def act_on_word(word, w: AffinePermutation, n: int) -> tuple:
    """Right action (word) w, with word extended by word(k + l) = word(k) + n."""
    l = len(word)
    out = []
    for k in range(1, l + 1):
        q, r = divmod(w(k) - 1, l)
        out.append(word[r] + q * n)
    return tuple(out)


def alcove_point(word, n: int) -> tuple:
    """The representative of the orbit of ``word`` in the fundamental alcove."""
    return tuple(sorted(window_rep(a, n) for a in word))


def alcove_decompose(word, n: int) -> tuple[tuple, AffinePermutation]:
    """Return (i, x) with i in the alcove, (i) x = word and x shortest possible."""
    word = tuple(word)
    l = len(word)
    i = alcove_point(word, n)
    slots: dict = {}
    for a, val in enumerate(i, start=1):
        slots.setdefault(val, []).append(a)
    wanted: dict = {}
    for k, val in enumerate(word, start=1):
        r = window_rep(val, n)
        wanted.setdefault(r, []).append(((val - r) // n, k))
    window = [0] * l
    for r, pos in wanted.items():
        # shortest choice: x^{-1} increasing on each block of equal alcove entries
        for a, (m, k) in zip(slots[r], sorted(pos, key=lambda mk: mk[1] - mk[0] * l)):
            window[k - 1] = a + m * l
    x = AffinePermutation(window)
    assert act_on_word(i, x, n) == word
    return i, x


def parabolic_lengths(i) -> tuple[int, int, int]:
    """(l(w0), l(w0 of the stabiliser of i), their difference) for an alcove point i."""
    l = len(i)
    full = l * (l - 1) // 2
    stab = 0
    for val in set(i):
        m = list(i).count(val)
        stab += m * (m - 1) // 2
    return full, stab, full - stab


def stabilizer_longest(i) -> AffinePermutation:
    """Longest element of the subgroup of S_l fixing the alcove point i."""
    l = len(i)
    w = list(range(1, l + 1))
    k = 0
    while k < l:
        j = k
        while j + 1 < l and i[j + 1] == i[k]:
            j += 1
        w[k : j + 1] = reversed(w[k : j + 1])
        k = j + 1
    return AffinePermutation(w)


def finite_permutations(l: int) -> list[AffinePermutation]:
    return [AffinePermutation(tuple(p[k] for k in range(l))) for p in permutations(range(1, l + 1))]


# ---------------------------------------------------------------- multisegments

@dataclass(frozen=True, order=True)
class Multisegment:
    """Isomorphism class of a nilpotent representation of a cyclic or linear quiver.

    ``n`` is the number of vertices of the cyclic quiver, or ``None`` for the
    linear quiver on Z.  ``items`` is a sorted tuple of ((start, length), mult).
    For the cyclic quiver starts are residues in 0..n-1.
    """
    n: int | None
    items: tuple

    @classmethod
    def from_segments(cls, n, segments) -> "Multisegment":
        counts: dict = {}
        for s, length in segments:
            if length <= 0:
                raise ValueError("segments have positive length")
            key = (s % n if n else s, length)
            counts[key] = counts.get(key, 0) + 1
        return cls(n, tuple(sorted(counts.items())))

    def segments(self) -> list:
        return [seg for seg, m in self.items for _ in range(m)]

    def total_dim(self) -> int:
        return sum(length * m for (_, length), m in self.items)

    def dim_vector(self):
        return dim_vector_of_segments(self.n, self.segments())

    def vertex(self, k: int) -> int:
        return k % self.n if self.n else k

    def rank(self, i: int, k: int) -> int:
        """Rank of x^k from vertex i to vertex i + k."""
        total = 0
        for (s, length), m in self.items:
            for t in range(length - k):
                if self.vertex(s + t) == self.vertex(i):
                    total += m
        return total

    def kernel_dim(self, i: int, k: int) -> int:
        """Dimension at vertex i of the kernel of x^k."""
        total = 0
        for (s, length), m in self.items:
            for t in range(max(0, length - k), length):
                if self.vertex(s + t) == self.vertex(i):
                    total += m
        return total

    def jordan_flag_type(self) -> tuple:
        """Dimension vectors of the successive layers ker x^k / ker x^(k-1)."""
        depth = max((length for (_, length), _ in self.items), default=0)
        verts = self.support()
        layers = []
        for k in range(1, depth + 1):
            layers.append(dimvec_from_dict(self.n, {
                i: self.kernel_dim(i, k) - self.kernel_dim(i, k - 1) for i in verts}))
        return tuple(layers)

    def support(self) -> list[int]:
        verts = set()
        for (s, length), _ in self.items:
            for t in range(length):
                verts.add(self.vertex(s + t))
        return sorted(verts)

    def hom_dim(self, other: "Multisegment") -> int:
        total = 0
        for (s, a), m in self.items:
            for (s2, b), m2 in other.items:
                for j in range(1, min(a, b) + 1):
                    if self.vertex(s) == self.vertex(s2 + b - j):
                        total += m * m2
        return total

    def orbit_dim(self) -> int:
        """Dimension of the orbit inside the representation space."""
        d = dimvec_dict(self.dim_vector())
        return sum(c * c for c in d.values()) - self.hom_dim(self)

    def __str__(self):
        return format_multisegment(self)


def dimvec_from_dict(n, d: dict):
    """Canonical dimension vector: a length-n tuple (cyclic) or sorted pairs (linear)."""
    if n:
        out = [0] * n
        for i, c in d.items():
            out[i % n] += c
        return tuple(out)
    return tuple(sorted((i, c) for i, c in d.items() if c))


def dimvec_dict(dv) -> dict:
    """Dictionary view of a dimension vector in either format."""
    if isinstance(dv, dict):
        return {i: c for i, c in dv.items() if c}
    if dv and isinstance(dv[0], tuple):
        return dict(dv)
    return {i: c for i, c in enumerate(dv) if c}


def dimvec_add(n, a, b):
    da, db = dimvec_dict(a), dimvec_dict(b)
    return dimvec_from_dict(n, {i: da.get(i, 0) + db.get(i, 0) for i in set(da) | set(db)})


def dimvec_size(dv) -> int:
    return sum(dimvec_dict(dv).values())


def dim_vector_of_segments(n, segments):
    d: dict = {}
    for s, length in segments:
        for t in range(length):
            v = (s + t) % n if n else s + t
            d[v] = d.get(v, 0) + 1
    return dimvec_from_dict(n, d)


@lru_cache(maxsize=None)
def enumerate_multisegments(n, dv) -> tuple:
    """All multisegments of the given dimension vector, sorted."""
    target = dimvec_dict(dv)
    size = sum(target.values())
    if size == 0:
        return (Multisegment(n, ()),)
    verts = sorted(target)
    cands = []
    starts = range(n) if n else verts
    for s in starts:
        for length in range(1, size + 1):
            segd = dimvec_dict(dim_vector_of_segments(n, [(s, length)]))
            if all(target.get(v, 0) >= c for v, c in segd.items()):
                cands.append(((s, length), segd))
    out = []

    def rec(idx, remaining, chosen):
        if not any(remaining.values()):
            out.append(Multisegment.from_segments(n, chosen))
            return
        for j in range(idx, len(cands)):
            seg, segd = cands[j]
            if all(remaining.get(v, 0) >= c for v, c in segd.items()):
                for v, c in segd.items():
                    remaining[v] -= c
                rec(j, remaining, chosen + [seg])
                for v, c in segd.items():
                    remaining[v] += c

    rec(0, dict(target), [])
    return tuple(sorted(set(out)))


def closure_leq(a: Multisegment, b: Multisegment) -> bool:
    """True if orbit ``a`` lies in the closure of orbit ``b`` (rank criterion)."""
    if a.dim_vector() != b.dim_vector():
        return False
    verts = sorted(set(a.support()) | set(b.support()))
    depth = max(a.total_dim(), 1)
    return all(a.rank(i, k) <= b.rank(i, k) for i in verts for k in range(1, depth + 1))


def orbit_of_partition(lam: Partition, n) -> Multisegment:
    """Direct sum over rows k of the segment starting at 1 - k of length lam_k."""
    return Multisegment.from_segments(n, [(1 - (k + 1), p) for k, p in enumerate(lam)])


def parse_multisegment(text: str, n) -> Multisegment:
    """Parse ``"start:length:mult;..."`` (multiplicity optional)."""
    segs = []
    if text.strip() in ("", "0"):
        return Multisegment.from_segments(n, [])
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        fields = chunk.split(":")
        if len(fields) not in (2, 3):
            raise ValueError(f"bad segment {chunk!r}")
        s, length = int(fields[0]), int(fields[1])
        mult = int(fields[2]) if len(fields) == 3 else 1
        if n and not 0 <= s < n:
            raise ValueError(f"start {s} is not a residue mod {n}")
        if mult < 1 or length < 1:
            raise ValueError(f"bad segment {chunk!r}")
        segs.extend([(s, length)] * mult)
    return Multisegment.from_segments(n, segs)


def format_multisegment(m: Multisegment) -> str:
    if not m.items:
        return "0"
    return ";".join(f"{s}:{length}:{mult}" for (s, length), mult in m.items)
