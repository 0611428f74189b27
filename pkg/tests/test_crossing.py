import itertools
import random

import pytest

from conftest import crossing_defn
from noncross.crossing import (
    Collection,
    all_noncrossing,
    complement_collection,
    crossing,
    find_crossing_pair,
    is_symmetric,
    orbit,
)
from noncross.cyclic import InvalidRange, cyclic_intervals, shift_set
from noncross.verify import verify


def random_subset(rng, n, k=None):
    k = rng.randrange(0, n + 1) if k is None else k
    return tuple(sorted(rng.sample(range(1, n + 1), k)))


def test_crossing_minimal_pattern():
    assert crossing({1, 3}, {2, 4}, 4)


def test_crossing_paper_members_do_not_cross():
    assert not crossing({2, 3, 5, 7}, {1, 3, 5, 7}, 10)


def test_intervals_never_cross():
    rng = random.Random(10)
    for _ in range(300):
        n = rng.randrange(2, 16)
        a = rng.randrange(1, n + 1)
        ln = rng.randrange(1, n + 1)
        I = shift_set(range(1, ln + 1), a, n)
        J = random_subset(rng, n)
        assert not crossing(I, J, n)


def test_crossing_matches_definitional_scan():
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randrange(4, 11)
        I, J = random_subset(rng, n), random_subset(rng, n)
        assert crossing(I, J, n) == crossing_defn(I, J, n), (I, J, n)


def test_crossing_exhaustive_small():
    for n in range(1, 7):
        subsets = []
        for k in range(n + 1):
            subsets.extend(itertools.combinations(range(1, n + 1), k))
        for I, J in itertools.combinations(subsets, 2):
            assert crossing(I, J, n) == crossing_defn(I, J, n)


def test_crossing_symmetry():
    rng = random.Random(12)
    for _ in range(200):
        n = rng.randrange(4, 14)
        I, J = random_subset(rng, n), random_subset(rng, n)
        assert crossing(I, J, n) == crossing(J, I, n)


def test_crossing_complement_duality():
    rng = random.Random(13)
    for _ in range(200):
        n = rng.randrange(4, 14)
        I, J = random_subset(rng, n), random_subset(rng, n)
        Ic = tuple(x for x in range(1, n + 1) if x not in I)
        Jc = tuple(x for x in range(1, n + 1) if x not in J)
        assert crossing(I, J, n) == crossing(Ic, Jc, n)


def test_crossing_rotation_equivariance():
    rng = random.Random(14)
    for _ in range(200):
        n = rng.randrange(4, 14)
        t = rng.randrange(0, n)
        I, J = random_subset(rng, n), random_subset(rng, n)
        assert crossing(I, J, n) == crossing(shift_set(I, t, n), shift_set(J, t, n), n)


def test_small_difference_never_crosses():
    rng = random.Random(15)
    for _ in range(200):
        n = rng.randrange(3, 14)
        I = random_subset(rng, n)
        J = list(I)
        if I and rng.random() < 0.7:
            J.remove(rng.choice(I))
            extra = [x for x in range(1, n + 1) if x not in I]
            if extra:
                J.append(rng.choice(extra))
        assert len(set(I) - set(J)) <= 1
        assert not crossing(I, J, n)


def test_all_noncrossing_golden(i_prime):
    assert all_noncrossing(i_prime)


def test_all_noncrossing_singleton():
    assert all_noncrossing(Collection(6, 3, [(1, 3, 5)]))


def test_all_noncrossing_witness():
    C = Collection(4, 2, [(1, 3), (2, 4)])
    assert find_crossing_pair(C) == ((1, 3), (2, 4))
    assert not all_noncrossing(C)


def test_orbit_five_shifts():
    O = orbit({1, 5, 9, 13}, 4, 20)
    assert len(O) == 5
    assert (2, 6, 10, 14) in O


def test_orbit_full_turn():
    assert orbit({2, 5}, 7, 7).sets == ((2, 5),)


def test_orbit_inside_golden(i_prime):
    O = orbit({1, 2, 3, 5}, 2, 10)
    assert len(O) == 5
    assert set(O.sets) <= set(i_prime.sets)


def test_is_symmetric_golden(i_prime):
    assert is_symmetric(i_prime)


def test_is_symmetric_intervals():
    for k, n in [(2, 7), (3, 8), (4, 10)]:
        assert is_symmetric(Collection(n, k, cyclic_intervals(k, n)))


def test_is_symmetric_mutation(i_prime):
    # dropping one non-interval member breaks invariance
    intervals = set(cyclic_intervals(4, 10))
    victim = next(s for s in i_prime.sets if s not in intervals)
    broken = Collection(10, 4, [s for s in i_prime.sets if s != victim])
    assert not is_symmetric(broken)


def test_complement_collection_involution(i_prime):
    assert complement_collection(complement_collection(i_prime)) == i_prime


def test_complement_of_golden_is_symmetric_maximal(i_prime):
    comp = complement_collection(i_prime)
    assert comp.k == 6 and comp.n == 10
    assert len(comp) == len(i_prime) == 6 * (10 - 6) + 1
    rep = verify(comp, expect_symmetric=True)
    assert rep.ok


def test_collection_canonical_order():
    C = Collection(5, 2, [(4, 5), (1, 2), (2, 3)])
    assert C.sets == ((1, 2), (2, 3), (4, 5))


def test_collection_rejects_bad_members():
    with pytest.raises(InvalidRange):
        Collection(5, 2, [(1, 2), (1, 2)])
    with pytest.raises(InvalidRange):
        Collection(5, 2, [(1, 2, 3)])
    with pytest.raises(InvalidRange):
        Collection(5, 2, [(0, 2)])
