"""Shared oracles and golden fixtures.

crossing_defn is the quartic definitional scan kept deliberately independent
of the optimized predicate; the golden constants below are transcribed
worked examples (stage families, the relabeling, the 25-set collection) and
are frozen here rather than recomputed.
"""

import itertools

import pytest

from noncross.crossing import Collection
from noncross.cyclic import add_mod


def crossing_defn(I, J, n):
    """O(n^4) oracle: scan every cyclically ordered quadruple a, b, c, d."""
    A = set(I) - set(J)
    B = set(J) - set(I)
    for a, b, c, d in itertools.combinations(range(1, n + 1), 4):
        if a in A and b in B and c in A and d in B:
            return True
        if a in B and b in A and c in B and d in A:
            return True
    return False


# stage families for (k, n) = (4, 20) with class order 3, 4, 2, 1
GOLD_B = {
    1: [[20, 1, 2, 3], [1, 2, 3, 4], [2, 3, 4, 5], [3, 4, 5, 6]],
    2: [[1, 2, 4, 5], [2, 4, 5, 6], [4, 5, 6, 8], [4, 5, 6, 9]],
    3: [[1, 2, 5, 6], [1, 2, 5, 9], [2, 5, 6, 9], [2, 5, 9, 13]],
    4: [[1, 5, 9, 13]],
}

# the 25-set symmetric maximal (4, 10) collection: five seeds shifted by 2Z
GOLD_I_PRIME_SEEDS = [
    [1, 2, 3, 4],
    [1, 2, 3, 5],
    [2, 3, 4, 5],
    [2, 3, 5, 7],
    [1, 3, 5, 7],
]

# relabeling image for (k, n) = (4, 10)
GOLD_F_4_10 = [1, 2, 5, 6, 9, 10, 13, 14, 17, 18]

# stage 4 of (k, n) = (7, 28) with class order 4, 6, 7, 2, 1, 3, 5
GOLD_728_P4 = [1, 2, 3, 5, 8, 9, 10, 12, 15, 16, 17, 19, 22, 23, 24, 26]
GOLD_728_B4 = [
    [24, 26, 1, 2, 3, 5, 8],
    [26, 1, 2, 3, 5, 8, 9],
    [26, 1, 2, 3, 5, 8, 10],
    [1, 2, 3, 5, 8, 9, 10],
    [1, 2, 3, 5, 8, 10, 12],
    [2, 3, 5, 8, 9, 10, 12],
    [2, 3, 5, 8, 10, 12, 15],
]

# exact entries of the published count table
GOLD_COUNTS = {
    (2, 4): 2,
    (2, 6): 2,
    (3, 6): 6,
    (3, 9): 24,
    (3, 12): 24,
    (4, 8): 110,
    (4, 10): 6,
    (6, 14): 18,
    (8, 18): 54,
}


def canon(sets):
    return sorted(tuple(sorted(s)) for s in sets)


@pytest.fixture
def i_prime():
    """The golden 25-set collection, expanded exactly as stated."""
    sets = {
        tuple(sorted(add_mod(i, 2 * x, 10) for i in seed))
        for seed in GOLD_I_PRIME_SEEDS
        for x in range(5)
    }
    assert len(sets) == 25
    return Collection(10, 4, sets)
