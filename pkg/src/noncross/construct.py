"""Explicit construction of symmetric maximal noncrossing collections.

The construction runs in two layers.  When n = d*k, subsets are produced in
stages: stage s works inside the suborder P_s obtained by deleting the first
s-1 congruence classes mod k, emits a seed family B_s of k-subsets anchored
at the stage's class representative, and closes it under shifting by k.  For
general (k, n) with g = GCD(k, n) and d = n/g, the (k, d*k) collection is
built with a class order that keeps the classes of 1..g for last, the stages
that use the other classes are dropped, and the survivors are pulled back
along an order-preserving relabeling of [n] onto the union of the remaining
classes.

Existence requires k to be congruent to 0, 1 or -1 modulo d; every
constructor here checks that first and raises ConditionNotSatisfied
otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .crossing import Collection
from .cyclic import InvalidRange, SubOrder, add_mod, check_ground, index_set, shift_set


class ConditionNotSatisfied(ValueError):
    """The pair (k, n) admits no symmetric maximal noncrossing collection."""

    def __init__(self, report: "ConditionReport"):
        self.report = report
        super().__init__(
            f"k={report.k}, n={report.n}: k mod d = {report.k % report.d if report.d else 0} "
            f"not in {{0, 1, d-1}} for d = {report.d}"
        )


class InvalidClassOrder(ValueError):
    """A supplied class order is not usable for the requested construction."""


class StageOutOfRange(ValueError):
    """Requested stage index outside 1 .. last stage."""


class NotAStageMember(ValueError):
    """minimal_h asked about a set that the stage did not emit."""


@dataclass(frozen=True)
class ConditionReport:
    """Existence arithmetic for a pair (k, n).

    g = GCD(k, n), d = n/g.  When satisfied, k = d*p + c with c in {-1, 0, 1};
    ties between the residues (possible only for d <= 2) are broken by the
    fixed precedence 0, 1, -1 so that output is deterministic.
    """

    k: int
    n: int
    g: int
    d: int
    satisfied: bool
    c: Optional[int] = None
    p: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "g": self.g,
            "d": self.d,
            "satisfied": self.satisfied,
            "c": self.c,
            "p": self.p,
        }


def condition_star(k: int, n: int) -> ConditionReport:
    """Decide whether (k, n) admits a symmetric maximal collection."""
    check_ground(n)
    if not isinstance(k, int) or not 0 <= k <= n:
        raise InvalidRange(f"k={k!r} outside [0, {n}]")
    g = math.gcd(k, n) if k else n
    d = n // g
    r = k % d
    if r == 0:
        c = 0
    elif r == 1:
        c = 1
    elif r == d - 1:
        c = -1
    else:
        return ConditionReport(k, n, g, d, False)
    return ConditionReport(k, n, g, d, True, c, (k - c) // d)


def orbit_of(a: int, k: int, n: int) -> tuple[int, ...]:
    """The congruence class of a under repeatedly adding k modulo n.

    As a subset of [n] this is {x : x = a mod GCD(k, n)}; its cardinality is
    n / GCD(k, n).
    """
    check_ground(n)
    if not 1 <= a <= n:
        raise InvalidRange(f"index {a} outside [1, {n}]")
    g = math.gcd(k, n) if k else n
    return tuple(x for x in range(1, n + 1) if (x - a) % g == 0)


def default_class_order(k: int) -> tuple[int, ...]:
    """Reverse natural order on class representatives: k, k-1, ..., 1."""
    return tuple(range(k, 0, -1))


def _check_permutation(order: Sequence[int], k: int) -> tuple[int, ...]:
    order = tuple(order)
    if sorted(order) != list(range(1, k + 1)):
        raise InvalidClassOrder(f"{order} is not a permutation of 1..{k}")
    return order


@dataclass(frozen=True)
class StagePlan:
    """Everything stage s of the n = d*k construction produced.

    p_s is the ambient suborder for the stage, p_sh maps each h in 1..d to
    the truncated suborder with the last d-h orbit elements removed, and b_s
    is the deduplicated seed family (every member contains a_s).
    """

    k: int
    d: int
    s: int
    a_s: int
    class_order: tuple[int, ...]
    p_s: SubOrder
    p_sh: dict[int, SubOrder] = field(repr=False)
    b_s: tuple[tuple[int, ...], ...] = ()

    @property
    def n(self) -> int:
        return self.d * self.k

    @property
    def orbit(self) -> tuple[int, ...]:
        return orbit_of(self.a_s, self.k, self.n)


def last_stage(k: int, d: int) -> int:
    """Index of the final stage: min(k - p + 1, k)."""
    rep = condition_star(k, d * k)
    if not rep.satisfied:
        raise ConditionNotSatisfied(rep)
    return min(k - rep.p + 1, k)


def build_stage(
    k: int, d: int, order: Optional[Sequence[int]], s: int
) -> StagePlan:
    """Build stage s of the n = d*k construction.

    Seeds are windows of k successive elements of the truncated suborders
    P_{s,h}, started from each position i in the stretch of P_s reaching
    back k steps of [n] from a_s; windows shorter than k are discarded and
    duplicates collapse.
    """
    n = d * k
    order = default_class_order(k) if order is None else _check_permutation(order, k)
    if not 1 <= s <= last_stage(k, d):
        raise StageOutOfRange(f"stage {s} outside 1..{last_stage(k, d)}")
    a_s = order[s - 1]
    removed: set[int] = set()
    for i in range(s - 1):
        removed.update(orbit_of(order[i], k, n))
    p_s = SubOrder(n, (x for x in range(1, n + 1) if x not in removed))
    # a_s - k lies in the stage's own orbit, hence still in P_s
    lo = p_s.successor(add_mod(a_s, n - k, n))
    i_range = p_s.interval_walk(lo, a_s)
    p_sh: dict[int, SubOrder] = {}
    seeds: set[tuple[int, ...]] = set()
    for h in range(1, d + 1):
        drop = {add_mod(a_s, m * k, n) for m in range(h, d)}
        sub = SubOrder(n, (x for x in p_s if x not in drop))
        p_sh[h] = sub
        if len(sub) < k:
            continue
        for i in i_range:
            assert i in sub, f"stage window start {i} fell out of P_({s},{h})"
            seeds.add(tuple(sorted(sub.take(i, k))))
    return StagePlan(k, d, s, a_s, order, p_s, p_sh, tuple(sorted(seeds)))


def minimal_h(I: Iterable[int], plan: StagePlan) -> int:
    """Smallest h whose window reproduces I; equals |orbit(a_s) & I|."""
    members = index_set(I, plan.n)
    if members not in plan.b_s:
        raise NotAStageMember(f"{members} is not in B_{plan.s}")
    return len(set(plan.orbit) & set(members))


def stage_orbit_closure(plan: StagePlan) -> Collection:
    """The stage family closed under shifting by k: the paper-layer L_s."""
    n = plan.n
    out = {shift_set(I, x * plan.k, n) for I in plan.b_s for x in range(plan.d)}
    return Collection(n, plan.k, out)


@dataclass(frozen=True)
class DkConstruction:
    """Full record of an n = d*k construction run."""

    k: int
    d: int
    class_order: tuple[int, ...]
    report: ConditionReport
    stages: tuple[StagePlan, ...]
    closures: tuple[Collection, ...]
    collection: Collection

    @property
    def n(self) -> int:
        return self.d * self.k


def construct_dk_detailed(
    k: int, d: int, order: Optional[Sequence[int]] = None
) -> DkConstruction:
    """Run every stage of the n = d*k construction and keep the pieces."""
    if k < 1 or d < 1:
        raise InvalidRange(f"need k >= 1 and d >= 1, got k={k}, d={d}")
    n = d * k
    report = condition_star(k, n)
    if not report.satisfied:
        raise ConditionNotSatisfied(report)
    order = default_class_order(k) if order is None else _check_permutation(order, k)
    stages = []
    closures = []
    union: set[tuple[int, ...]] = set()
    for s in range(1, last_stage(k, d) + 1):
        plan = build_stage(k, d, order, s)
        clo = stage_orbit_closure(plan)
        stages.append(plan)
        closures.append(clo)
        union.update(clo.sets)
    return DkConstruction(
        k, d, order, report, tuple(stages), tuple(closures), Collection(n, k, union)
    )


def construct_dk(k: int, d: int, order: Optional[Sequence[int]] = None) -> Collection:
    """A symmetric maximal noncrossing collection of k-subsets of [d*k]."""
    return construct_dk_detailed(k, d, order).collection


@dataclass(frozen=True)
class Relabeling:
    """The order-preserving bijection from [n] onto the kept classes in [d*k].

    forward[i-1] is the image of i; the map sends a + g*x to a + k*x for
    a in [g], so it commutes with the two successor functions.
    """

    k: int
    n: int
    forward: tuple[int, ...]

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(self.forward))

    def apply(self, elems: Iterable[int]) -> tuple[int, ...]:
        return tuple(sorted(self.forward[e - 1] for e in elems))

    def invert(self, elems: Iterable[int]) -> tuple[int, ...]:
        inv = {v: i + 1 for i, v in enumerate(self.forward)}
        return tuple(sorted(inv[e] for e in elems))


def relabel_F(k: int, n: int) -> Relabeling:
    """Build the relabeling used to descend from [d*k] to [n]."""
    report = condition_star(k, n)
    if not report.satisfied:
        raise ConditionNotSatisfied(report)
    g, _ = report.g, report.d
    forward = tuple((i - 1) % g + 1 + k * ((i - 1) // g) for i in range(1, n + 1))
    return Relabeling(k, n, forward)


def resolve_class_order(
    k: int, g: int, order: Optional[Sequence[int]]
) -> tuple[int, ...]:
    """Normalize a caller-supplied class order for the general construction.

    Accepts nothing (reverse natural order), an order on 1..g (the tail
    g+1..k is prepended in reverse natural order), or a full permutation of
    1..k, which must keep the classes of 1..g for the final g stages.
    """
    if order is None:
        return default_class_order(k)
    order = tuple(order)
    if len(order) == g != k:
        if sorted(order) != list(range(1, g + 1)):
            raise InvalidClassOrder(f"{order} is not a permutation of 1..{g}")
        return tuple(range(k, g, -1)) + order
    order = _check_permutation(order, k)
    if set(order[: k - g]) != set(range(g + 1, k + 1)):
        raise InvalidClassOrder(
            f"classes {tuple(range(1, g + 1))} must occupy the last {g} positions, got {order}"
        )
    return order


@dataclass(frozen=True)
class GeneralConstruction:
    """Full record of a general (k, n) construction run."""

    k: int
    n: int
    report: ConditionReport
    inner: Optional[DkConstruction]
    kept: Optional[Collection]
    relabel: Optional[Relabeling]
    collection: Collection


def construct_general_detailed(
    k: int, n: int, order: Optional[Sequence[int]] = None
) -> GeneralConstruction:
    """Run the general construction, keeping the inner stages for inspection."""
    report = condition_star(k, n)
    if not report.satisfied:
        raise ConditionNotSatisfied(report)
    if k == 0:
        return GeneralConstruction(
            k, n, report, None, None, None, Collection(n, 0, [()])
        )
    g, d = report.g, report.d
    full_order = resolve_class_order(k, g, order)
    inner = construct_dk_detailed(k, d, full_order)
    kept_sets: set[tuple[int, ...]] = set()
    for clo in inner.closures[k - g:]:
        kept_sets.update(clo.sets)
    kept = Collection(d * k, k, kept_sets)
    rel = relabel_F(k, n)
    image = set(rel.image)
    for member in kept.sets:
        if not set(member) <= image:
            raise InvalidClassOrder(
                f"kept stages leak outside the relabeled classes at {member}"
            )
    final = Collection(n, k, (rel.invert(member) for member in kept.sets))
    return GeneralConstruction(k, n, report, inner, kept, rel, final)


def construct_general(
    k: int, n: int, order: Optional[Sequence[int]] = None
) -> Collection:
    """A symmetric maximal noncrossing collection of k-subsets of [n]."""
    return construct_general_detailed(k, n, order).collection
