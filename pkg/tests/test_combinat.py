from collections import deque
from itertools import product

import pytest
from hypothesis import given, strategies as st

from qfock.combinat import (
    AffinePermutation,
    act_on_word,
    addable_removable,
    alcove_decompose,
    beta_word,
    closure_leq,
    conjugate,
    content_vector,
    dominance_leq,
    enumerate_multisegments,
    format_multisegment,
    parabolic_lengths,
    parse_multisegment,
    partition_of_word,
    partitions,
    residue_data,
    stabilizer_longest,
)

partition_st = st.integers(0, 9).flatmap(lambda w: st.sampled_from(partitions(w)))


def test_partitions_examples():
    assert partitions(0) == ((),)
    assert partitions(3) == ((3,), (2, 1), (1, 1, 1))
    assert partitions(4, None, 2) == ((4,), (3, 1), (2, 2))
    # p(n), counted independently
    assert [len(partitions(w)) for w in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_partition_order_refines_dominance():
    for w in range(8):
        ps = partitions(w)
        for a in range(len(ps)):
            for b in range(a + 1, len(ps)):
                assert not dominance_leq(ps[a], ps[b])


def test_dominance_examples():
    assert dominance_leq((1, 1, 1), (3,))
    assert not dominance_leq((3,), (1, 1, 1))
    assert dominance_leq((2, 2), (3, 1))
    with pytest.raises(ValueError):
        dominance_leq((2,), (1,))


def test_colours_of_432():
    assert content_vector((4, 3, 2)) == {-2: 1, -1: 2, 0: 2, 1: 2, 2: 1, 3: 1}


def test_residue_counts_small():
    empty = residue_data((), 2)
    assert [empty.count(j) for j in range(-3, 4)] == [0, 0, 0, 1, 0, 0, 0]
    one = residue_data((1,), 2)
    assert (one.count(0), one.count(1), one.count(-1)) == (-1, 1, 1)
    assert one.above(0) == 0


@given(partition_st)
def test_box_counts_match_content_identity(lam):
    d = content_vector(lam)
    assert sum(d.values()) == sum(lam)
    data = residue_data(lam, 3)
    for j in range(-12, 13):
        expected = -2 * d.get(j, 0) + d.get(j - 1, 0) + d.get(j + 1, 0) + (j == 0)
        assert data.count(j) == expected


@given(partition_st)
def test_conjugate_and_beta_words(lam):
    assert conjugate(conjugate(lam)) == lam
    add, rem = addable_removable(lam)
    assert len(add) == len(rem) + 1
    word = beta_word(lam, len(lam) + 2)
    assert all(word[k] > word[k + 1] for k in range(len(word) - 1))
    assert partition_of_word(word) == lam


def _min_length_by_search(i, j, n, bound=14):
    """0-1 breadth-first search: s_k moves cost one, rotations cost nothing."""
    l = len(i)
    gens = [AffinePermutation.simple(k, l) for k in range(l)]
    rot = [AffinePermutation.rotation(l, 1), AffinePermutation.rotation(l, -1)]
    dist = {i: 0}
    queue = deque([i])
    while queue:
        w = queue.popleft()
        if w == j:
            return dist[w]
        for g, cost in [(g, 0) for g in rot] + [(g, 1) for g in gens]:
            u = act_on_word(w, g, n)
            if max(map(abs, u)) > bound:
                continue
            if u not in dist or dist[w] + cost < dist[u]:
                dist[u] = dist[w] + cost
                if cost:
                    queue.append(u)
                else:
                    queue.appendleft(u)
    raise AssertionError("target not reached")


def test_alcove_examples():
    i, x = alcove_decompose((-1, 0), 2)
    assert i == (-1, 0) and x.length() == 0
    i, x = alcove_decompose((0, -1), 2)
    assert i == (-1, 0) and x == AffinePermutation.simple(1, 2)
    i, x = alcove_decompose((-1, 2), 2)
    assert i == (-1, 0) and x.length() == 1 and x.rotation_power != 0


@pytest.mark.parametrize("n, l", [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_alcove_decompose_is_shortest(n, l):
    for j in product(range(-3, 4), repeat=l):
        i, x = alcove_decompose(j, n)
        assert act_on_word(i, x, n) == j
        assert x.length() == _min_length_by_search(i, j, n)


@given(st.integers(2, 3), st.integers(1, 3).flatmap(lambda l: st.lists(st.integers(-8, 8), min_size=l, max_size=l)))
def test_alcove_round_trip(n, j):
    i, x = alcove_decompose(tuple(j), n)
    assert act_on_word(i, x, n) == tuple(j)
    assert list(i) == sorted(i) and all(1 - n <= a <= 0 for a in i)


@given(st.permutations([1, 2, 3]), st.lists(st.integers(-2, 2), min_size=3, max_size=3), st.integers(-2, 2))
def test_length_additive_along_reduced_word(perm, shifts, power):
    w = AffinePermutation(perm) * AffinePermutation.translation(shifts) * AffinePermutation.rotation(3, power)
    p, word = w.reduced_word()
    assert len(word) == w.length()
    x = AffinePermutation.identity(3)
    for k, j in enumerate(word, start=1):
        x = x.times_simple(j)
        assert x.length() == k
    assert x * AffinePermutation.rotation(3, p) == w


def test_rotation_conjugates_simple_reflections():
    l = 3
    pi = AffinePermutation.rotation(l)
    for i in range(l):
        s = AffinePermutation.simple(i, l)
        prev = AffinePermutation.simple((i - 1) % l, l)
        assert prev == pi.inverse() * s * pi or prev == pi * s * pi.inverse()


def test_parabolic_lengths():
    assert parabolic_lengths((-1, 0)) == (1, 0, 1)
    assert parabolic_lengths((0, 0)) == (1, 1, 0)
    assert parabolic_lengths((-1, -1, 0)) == (3, 1, 2)
    assert stabilizer_longest((-1, -1, 0)).length() == 1


def _ms(text, n=2):
    return parse_multisegment(text, n)


def test_multisegment_enumeration():
    fmt = lambda d: [format_multisegment(m) for m in enumerate_multisegments(2, d)]
    assert fmt((1, 0)) == ["0:1:1"]
    assert sorted(fmt((1, 1))) == sorted(["0:2:1", "1:2:1", "0:1:1;1:1:1"])
    assert fmt((2, 0)) == ["0:1:2"]
    # by hand: 0 + [0,1], 0 + [1,0], 0 + 0 + 1 and [0,1,0]
    assert len(enumerate_multisegments(2, (2, 1))) == 4


@given(st.sampled_from([(1, 1), (2, 1), (2, 2), (3, 1), (1, 1, 1), (2, 1, 1)]))
def test_multisegments_format_round_trip(d):
    n = len(d)
    for m in enumerate_multisegments(n, d):
        assert m.dim_vector() == d
        assert parse_multisegment(format_multisegment(m), n) == m


def test_closure_examples():
    zero, s0, s1 = _ms("0:1:1;1:1:1"), _ms("0:2:1"), _ms("1:2:1")
    assert closure_leq(s0, s0)
    assert closure_leq(zero, s0) and closure_leq(zero, s1)
    assert not closure_leq(s0, s1) and not closure_leq(s1, s0)


@pytest.mark.parametrize("d", [(2, 2), (3, 2), (2, 3), (3, 1), (1, 2, 2)])
def test_closure_is_partial_order(d):
    orbits = enumerate_multisegments(len(d), d)
    for a in orbits:
        assert closure_leq(a, a)
        for b in orbits:
            if a != b and closure_leq(a, b):
                assert not closure_leq(b, a)
            for c in orbits:
                if closure_leq(a, b) and closure_leq(b, c):
                    assert closure_leq(a, c)


def test_empty_multisegment_parses():
    assert _ms("").total_dim() == 0
    assert _ms("0").total_dim() == 0
