import random

import pytest

from noncross.cyclic import (
    MAX_N,
    InvalidRange,
    MemberNotInSubset,
    SubOrder,
    add_mod,
    cyclic_intervals,
    elems_of,
    index_set,
    mask_of,
    shift_mask,
    shift_set,
)


def test_add_mod_wraparound():
    assert add_mod(9, 4, 10) == 3


def test_add_mod_identity():
    assert add_mod(1, 0, 10) == 1


def test_add_mod_orbit_matches_iterated_steps():
    # orbit of 2 under +2 in [10], built one step at a time
    x, orbit = 2, {2}
    for _ in range(9):
        x = add_mod(x, 2, 10)
        orbit.add(x)
    assert orbit == {2, 4, 6, 8, 10}
    assert add_mod(2, 2 * 9, 10) == 10


def test_add_mod_negative_and_large_offsets():
    assert add_mod(3, -5, 10) == 8
    assert add_mod(3, 1000, 10) == 3


def test_add_mod_range_errors():
    with pytest.raises(InvalidRange):
        add_mod(0, 1, 10)
    with pytest.raises(InvalidRange):
        add_mod(11, 1, 10)


def test_shift_set_stage_orbit_member():
    assert shift_set({1, 5, 9, 13}, 4, 20) == (5, 9, 13, 17)


def test_shift_set_full_turn_identity():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randrange(1, 30)
        s = rng.sample(range(1, n + 1), rng.randrange(0, n + 1))
        assert shift_set(s, n, n) == tuple(sorted(s))


def test_shift_set_orbit_closure():
    s = (1, 2, 3, 5)
    for _ in range(5):
        s = shift_set(s, 2, 10)
    assert s == (1, 2, 3, 5)


def test_masks_round_trip():
    rng = random.Random(2)
    for _ in range(100):
        n = rng.randrange(1, 60)
        s = tuple(sorted(rng.sample(range(1, n + 1), rng.randrange(0, n + 1))))
        assert elems_of(mask_of(s)) == s
        assert elems_of(shift_mask(mask_of(s), 7, n)) == shift_set(s, 7, n)


def test_index_set_validation():
    assert index_set([3, 1, 2], 5) == (1, 2, 3)
    with pytest.raises(InvalidRange):
        index_set([0], 5)
    with pytest.raises(InvalidRange):
        index_set([1, 1], 5)
    with pytest.raises(InvalidRange):
        index_set([6], 5)


def test_ground_cap():
    with pytest.raises(InvalidRange):
        SubOrder(MAX_N + 1, [1])
    with pytest.raises(InvalidRange):
        index_set([1], 0)


def test_successor_example():
    Q = SubOrder(8, [1, 3, 4, 6, 7])
    assert Q.successor(7) == 1
    assert Q.successor(1) == 3
    assert Q.predecessor(1) == 7


def test_successor_singleton():
    Q = SubOrder(5, [3])
    assert Q.successor(3) == 3


def test_successor_stage_suborder():
    # the 16-member stage suborder of the (7, 28) walkthrough
    Q = SubOrder(28, [1, 2, 3, 5, 8, 9, 10, 12, 15, 16, 17, 19, 22, 23, 24, 26])
    assert Q.successor(26) == 1
    assert Q.successor(3) == 5


def test_successor_requires_membership():
    Q = SubOrder(8, [1, 3, 4])
    with pytest.raises(MemberNotInSubset):
        Q.successor(2)


def test_successor_is_bijection():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randrange(2, 40)
        Q = SubOrder(n, rng.sample(range(1, n + 1), rng.randrange(1, n + 1)))
        assert sorted(Q.successor(x) for x in Q) == list(Q.members)
        for x in Q:
            y = x
            for _ in range(len(Q)):
                y = Q.successor(y)
            assert y == x


def test_interval_ground_example():
    Q = SubOrder.full(8)
    assert Q.interval(7, 3) == (1, 2, 3, 7, 8)
    assert set(Q.interval(7, 3)) == {7, 8, 1, 2, 3}


def test_interval_point():
    Q = SubOrder(9, [2, 4, 6])
    assert Q.interval(4, 4) == (4,)


def test_interval_wrap_closure():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.randrange(2, 30)
        Q = SubOrder(n, rng.sample(range(1, n + 1), rng.randrange(1, n + 1)))
        b = rng.choice(Q.members)
        assert Q.interval(Q.successor(b), b) == Q.members


def test_interval_partition():
    # [a,b] and [succ(b), pred(a)] split Q when both are proper
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randrange(3, 30)
        Q = SubOrder(n, rng.sample(range(1, n + 1), rng.randrange(2, n + 1)))
        a, b = rng.choice(Q.members), rng.choice(Q.members)
        left = set(Q.interval(a, b))
        if len(left) == len(Q):
            continue
        right = set(Q.interval(Q.successor(b), Q.predecessor(a)))
        assert left | right == set(Q.members)
        assert not (left & right)


def test_cmp_linear_example():
    # linear order rooted at 7 on [8]: 7 < 8 < 1 < 2 < ... < 6
    Q = SubOrder.full(8)
    assert Q.cmp_linear(7, 2, 5) == -1
    assert Q.cmp_linear(7, 8, 1) == -1
    assert Q.cmp_linear(7, 6, 7) == 1


def test_cmp_linear_reflexive():
    Q = SubOrder(12, [1, 4, 7, 9])
    assert Q.cmp_linear(4, 9, 9) == 0


def test_cmp_linear_sorts_as_rotation():
    for n in (3, 7, 10):
        Q = SubOrder.full(n)
        for base in range(1, n + 1):
            got = sorted(range(1, n + 1), key=lambda x: Q.linear_rank(base, x))
            want = [(base - 1 + t) % n + 1 for t in range(n)]
            assert got == want


def test_cmp_linear_requires_membership():
    Q = SubOrder(8, [1, 3, 4])
    with pytest.raises(MemberNotInSubset):
        Q.cmp_linear(1, 3, 5)


def test_linear_order_refines_cyclic_order():
    # a <_i b <_i c forces the cyclic arrangement a, b, c
    rng = random.Random(6)
    Q = SubOrder.full(9)
    for _ in range(100):
        base = rng.randrange(1, 10)
        a, b, c = rng.sample(range(1, 10), 3)
        ra, rb, rc = (Q.linear_rank(base, x) for x in (a, b, c))
        if ra < rb < rc:
            # walking clockwise from a must meet b before c
            walk = Q.interval_walk(a, c)
            assert b in walk


def test_is_interval_examples():
    Q = SubOrder.full(8)
    assert Q.is_interval({7, 8, 1, 2, 3})
    assert SubOrder.full(4).is_interval({1, 3}) is False
    assert Q.is_interval(set())
    assert Q.is_interval(set(range(1, 9)))


def test_is_interval_on_suborder():
    Q = SubOrder(8, [1, 3, 4, 6, 7])
    # {7, 1, 3} is an interval of Q even though it is not one of [8]
    assert Q.is_interval({7, 1, 3})
    assert not Q.is_interval({1, 6})


def test_is_interval_membership_error():
    Q = SubOrder(8, [1, 3, 4])
    with pytest.raises(MemberNotInSubset):
        Q.is_interval({1, 2})


def test_interval_lemma_betweenness():
    # a <_I b <_I c with a, c in a proper interval I forces b in I
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randrange(4, 25)
        Q = SubOrder(n, rng.sample(range(1, n + 1), rng.randrange(3, n + 1)))
        i, j = rng.choice(Q.members), rng.choice(Q.members)
        I = Q.interval(i, j)
        if len(I) == len(Q):
            continue
        start = Q.interval_walk(i, j)[0]
        inside = set(I)
        for a in I:
            for c in I:
                for b in Q:
                    ra, rb, rc = (Q.linear_rank(start, x) for x in (a, b, c))
                    if ra < rb < rc:
                        assert b in inside


def test_interval_alternation_lemma():
    # for an interval I and cyclic a, b, c, d with a, c in I: b in I or d in I
    rng = random.Random(8)
    for _ in range(60):
        n = rng.randrange(4, 25)
        Q = SubOrder(n, rng.sample(range(1, n + 1), rng.randrange(4, n + 1)))
        i, j = rng.choice(Q.members), rng.choice(Q.members)
        I = set(Q.interval(i, j))
        quad = sorted(rng.sample(Q.members, 4))
        for rot in range(4):
            a, b, c, d = quad[rot:] + quad[:rot]
            if a in I and c in I:
                assert b in I or d in I


def test_cyclic_intervals_counts():
    assert len(cyclic_intervals(3, 8)) == 8
    assert cyclic_intervals(0, 5) == ((),)
    assert cyclic_intervals(5, 5) == ((1, 2, 3, 4, 5),)
    assert (1, 2, 8) in cyclic_intervals(3, 8)
