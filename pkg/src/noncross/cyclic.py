"""Cyclic-order arithmetic on [n] = {1, ..., n} and on its subsets.

Indices are 1-based throughout the public API.  Subsets travel as sorted
tuples of ints; internally they are packed into integer bit masks (bit i-1
holds membership of i) so that intersections and cardinalities are O(1).
The bit-mask width is capped by MAX_N.
"""

from __future__ import annotations

from typing import Iterable, Iterator

#: Largest supported ground-set size.  Every algorithm in this package is
#: dominated by pairwise mask operations, so the cap keeps masks word-sized-ish
#: and catches nonsense inputs early.
MAX_N = 128


class MemberNotInSubset(KeyError):
    """Raised when an operation on a cyclic suborder receives a non-member."""


class InvalidRange(ValueError):
    """Raised for out-of-range (k, n) or index arguments."""


def check_ground(n: int) -> int:
    """Validate a ground-set size, returning it."""
    if not isinstance(n, int) or n < 1:
        raise InvalidRange(f"ground size must be a positive integer, got {n!r}")
    if n > MAX_N:
        raise InvalidRange(f"ground size {n} exceeds cap {MAX_N}")
    return n


def index_set(elems: Iterable[int], n: int) -> tuple[int, ...]:
    """Validate and canonicalize a subset of [n] as a sorted tuple."""
    check_ground(n)
    out = tuple(sorted(elems))
    for e in out:
        if not isinstance(e, int) or not 1 <= e <= n:
            raise InvalidRange(f"index {e!r} outside [1, {n}]")
    for a, b in zip(out, out[1:]):
        if a == b:
            raise InvalidRange(f"duplicate index {a} in subset")
    return out


def mask_of(elems: Iterable[int]) -> int:
    """Pack 1-based indices into a bit mask (bit i-1 set iff i present)."""
    m = 0
    for e in elems:
        m |= 1 << (e - 1)
    return m


def elems_of(mask: int) -> tuple[int, ...]:
    """Unpack a bit mask back into a sorted tuple of 1-based indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask &= mask - 1
    return tuple(out)


def add_mod(a: int, b: int, n: int) -> int:
    """a shifted by b steps around the n-cycle, landing in [1, n].

    b may be any integer; it is reduced mod n first.
    """
    check_ground(n)
    if not 1 <= a <= n:
        raise InvalidRange(f"index {a} outside [1, {n}]")
    return (a - 1 + b) % n + 1


def shift_set(elems: Iterable[int], t: int, n: int) -> tuple[int, ...]:
    """Shift every element of a subset of [n] by t, re-sorted."""
    return tuple(sorted(add_mod(e, t, n) for e in elems))


def shift_mask(mask: int, t: int, n: int) -> int:
    """Mask-level rotation: shift_set on packed subsets."""
    t %= n
    full = (1 << n) - 1
    return ((mask << t) | (mask >> (n - t))) & full if t else mask


def cyclic_intervals(k: int, n: int) -> tuple[tuple[int, ...], ...]:
    """All distinct length-k intervals of [n], canonically ordered.

    There are n of them for 1 <= k <= n-1 and a single one for k in {0, n}.
    """
    check_ground(n)
    if k == 0:
        return ((),)
    seen = {tuple(sorted(add_mod(i, j, n) for j in range(k))) for i in range(1, n + 1)}
    return tuple(sorted(seen))


class SubOrder:
    """A nonempty subset of [n] carrying the cyclic order induced from [n].

    Members are stored sorted ascending; the cyclic successor of the largest
    member wraps to the smallest.
    """

    __slots__ = ("n", "members", "mask", "_pos")

    def __init__(self, n: int, members: Iterable[int]):
        self.n = check_ground(n)
        self.members = index_set(members, n)
        if not self.members:
            raise InvalidRange("a cyclic suborder must be nonempty")
        self.mask = mask_of(self.members)
        self._pos = {x: i for i, x in enumerate(self.members)}

    @classmethod
    def full(cls, n: int) -> "SubOrder":
        return cls(n, range(1, n + 1))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self._pos

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __repr__(self) -> str:
        return f"SubOrder(n={self.n}, members={self.members})"

    def _index(self, x: int) -> int:
        try:
            return self._pos[x]
        except KeyError:
            raise MemberNotInSubset(f"{x} is not a member of {self!r}") from None

    def successor(self, x: int) -> int:
        """Next member clockwise; a bijection of the suborder onto itself."""
        i = self._index(x)
        return self.members[(i + 1) % len(self.members)]

    def predecessor(self, x: int) -> int:
        i = self._index(x)
        return self.members[(i - 1) % len(self.members)]

    def advance(self, x: int, steps: int) -> int:
        """successor iterated `steps` times (negative steps walk backwards)."""
        i = self._index(x)
        return self.members[(i + steps) % len(self.members)]

    def take(self, start: int, count: int) -> tuple[int, ...]:
        """`count` successive members beginning at `start`, in cyclic order.

        May wrap and revisit members when count exceeds the suborder size;
        callers that need distinct elements must check len() themselves.
        """
        i = self._index(start)
        m = len(self.members)
        return tuple(self.members[(i + j) % m] for j in range(count))

    def interval(self, a: int, b: int) -> tuple[int, ...]:
        """The cyclic interval [a, b]: walk clockwise from a until b, sorted.

        Equals the whole suborder exactly when successor(b) == a.
        """
        i, j = self._index(a), self._index(b)
        m = len(self.members)
        span = (j - i) % m + 1
        return tuple(sorted(self.members[(i + t) % m] for t in range(span)))

    def interval_walk(self, a: int, b: int) -> tuple[int, ...]:
        """Like interval() but in walk order (a first, b last)."""
        i, j = self._index(a), self._index(b)
        m = len(self.members)
        span = (j - i) % m + 1
        return tuple(self.members[(i + t) % m] for t in range(span))

    def linear_rank(self, base: int, x: int) -> int:
        """Position of x in the linear order with minimum `base` (base -> 0)."""
        return (self._index(x) - self._index(base)) % len(self.members)

    def cmp_linear(self, base: int, a: int, b: int) -> int:
        """Compare a, b in the linear order rooted at base: -1, 0 or +1."""
        ra, rb = self.linear_rank(base, a), self.linear_rank(base, b)
        return (ra > rb) - (ra < rb)

    def is_interval(self, elems: Iterable[int]) -> bool:
        """True iff the given subset is a cyclic interval of this suborder.

        The empty set and the full suborder both count as intervals.
        """
        sub = set(elems)
        if not sub:
            return True
        gaps = 0
        for x in sub:
            if x not in self._pos:
                raise MemberNotInSubset(f"{x} is not a member of {self!r}")
            if self.successor(x) not in sub:
                gaps += 1
        return gaps <= 1
