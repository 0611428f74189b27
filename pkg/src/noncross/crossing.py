"""Crossing predicate, +k orbits, and symmetry tests for set collections.

Two k-subsets I, J of the n-cycle cross when elements of I-J and J-I
alternate around the circle (a <o b <o c <o d with a, c in I-J and
b, d in J-I).  The predicate here walks the circle once and counts
alternation blocks; the quartic definitional scan lives in the test suite
as an independent oracle.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .cyclic import (
    InvalidRange,
    check_ground,
    elems_of,
    index_set,
    mask_of,
    shift_mask,
)


def crossing_masks(mi: int, mj: int) -> bool:
    """Mask-level crossing test; the hot path for enumeration.

    Crossing iff the circular sequence of (I-J)/(J-I) labels, read along the
    set bits of the symmetric difference, changes at least 4 times.
    """
    a = mi & ~mj
    b = mj & ~mi
    if not a or not b:
        return False
    u = a | b
    trans = 0
    first = None
    prev = False
    while u:
        low = u & -u
        lab = bool(a & low)
        if first is None:
            first = lab
        elif lab != prev:
            trans += 1
            if trans >= 4:
                return True
        prev = lab
        u &= u - 1
    if prev != first:
        trans += 1
    return trans >= 4


def crossing(I: Iterable[int], J: Iterable[int], n: int) -> bool:
    """True iff I and J cross in the cyclic order on [n]."""
    return crossing_masks(mask_of(index_set(I, n)), mask_of(index_set(J, n)))


class Collection:
    """A set of k-element subsets of [n] in canonical lexicographic order.

    Canonical form is the sorted tuple of sorted member tuples; two
    collections are equal exactly when their canonical forms coincide.
    """

    __slots__ = ("n", "k", "sets", "_masks")

    def __init__(self, n: int, k: int, sets: Iterable[Iterable[int]]):
        check_ground(n)
        if not 0 <= k <= n:
            raise InvalidRange(f"subset size k={k} outside [0, {n}]")
        canon = sorted(index_set(s, n) for s in sets)
        for s in canon:
            if len(s) != k:
                raise InvalidRange(f"member {s} has size {len(s)}, expected {k}")
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise InvalidRange(f"duplicate member {a}")
        self.n = n
        self.k = k
        self.sets = tuple(canon)
        self._masks: Optional[tuple[int, ...]] = None

    @property
    def masks(self) -> tuple[int, ...]:
        if self._masks is None:
            self._masks = tuple(mask_of(s) for s in self.sets)
        return self._masks

    def member_set(self) -> frozenset:
        return frozenset(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.sets)

    def __contains__(self, s) -> bool:
        return tuple(s) in self.member_set()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Collection)
            and (self.n, self.k, self.sets) == (other.n, other.k, other.sets)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.sets))

    def __repr__(self) -> str:
        return f"Collection(n={self.n}, k={self.k}, {len(self.sets)} sets)"


def find_crossing_pair(
    C: Collection,
) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """First crossing pair of members in canonical order, or None."""
    masks = C.masks
    for i in range(len(masks)):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            if crossing_masks(mi, masks[j]):
                return C.sets[i], C.sets[j]
    return None


def all_noncrossing(C: Collection) -> bool:
    """True iff every pair of members is noncrossing."""
    return find_crossing_pair(C) is None


def orbit_masks(mask: int, step: int, n: int) -> list[int]:
    """The distinct shifts of a packed subset by multiples of `step`."""
    out = [mask]
    x = shift_mask(mask, step, n)
    while x != mask:
        out.append(x)
        x = shift_mask(x, step, n)
    return out


def orbit(I: Iterable[int], step: int, n: int) -> Collection:
    """All distinct shifts of I by multiples of step, as a collection."""
    base = index_set(I, n)
    return Collection(n, len(base), [elems_of(m) for m in orbit_masks(mask_of(base), step, n)])


def is_symmetric(C: Collection) -> bool:
    """True iff shifting every member by k permutes the collection."""
    members = set(C.masks)
    return all(shift_mask(m, C.k, C.n) in members for m in members)


def complement_collection(C: Collection) -> Collection:
    """The collection of complements [n]-I, over (n-k, n)."""
    full = (1 << C.n) - 1
    return Collection(C.n, C.n - C.k, [elems_of(full & ~m) for m in C.masks])
