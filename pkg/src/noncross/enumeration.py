"""Exhaustive enumeration of symmetric maximal noncrossing collections.

A symmetric collection is a union of whole orbits of the shift I -> I + k,
so the search space is the set of orbits rather than the set of subsets.
Orbits that cross themselves can never participate; the survivors form a
weighted compatibility graph (weight = orbit size) whose exact-weight
cliques, topped up with the always-compatible interval orbits, are precisely
the symmetric maximal collections.  Collections are counted raw, as distinct
sets of sets: rotations of one another count separately.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Union

from .construct import condition_star
from .crossing import Collection, crossing_masks, orbit_masks
from .cyclic import check_ground, cyclic_intervals, elems_of, mask_of
from .verify import CapExceeded

#: Ground-size cap for full enumeration (C(n, k) subsets get materialized).
ENUM_CAP = 16


@dataclass(frozen=True)
class Orbit:
    """One orbit of the +k shift on k-subsets of [n]."""

    rep: tuple[int, ...]
    masks: tuple[int, ...]
    is_interval: bool
    self_compatible: bool

    @property
    def size(self) -> int:
        return len(self.masks)


@dataclass(frozen=True)
class OrbitAtlas:
    """The complete partition of all k-subsets of [n] into +k orbits."""

    k: int
    n: int
    orbits: tuple[Orbit, ...]

    @property
    def d(self) -> int:
        return self.n // math.gcd(self.k, self.n) if self.k else 1


def build_atlas(k: int, n: int, cap: int = ENUM_CAP) -> OrbitAtlas:
    """Partition all C(n, k) subsets into +k orbits with compatibility flags."""
    check_ground(n)
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    d = n // math.gcd(k, n) if k else 1
    intervals = {mask_of(s) for s in cyclic_intervals(k, n)}
    seen: set[int] = set()
    orbits = []
    for combo in itertools.combinations(range(1, n + 1), k):
        m = mask_of(combo)
        if m in seen:
            continue
        cycle = orbit_masks(m, k, n)
        seen.update(cycle)
        assert d % len(cycle) == 0, "orbit size must divide d"
        self_ok = all(
            not crossing_masks(cycle[0], cycle[t]) for t in range(1, len(cycle) // 2 + 1)
        )
        orbits.append(
            Orbit(
                rep=combo,
                masks=tuple(cycle),
                is_interval=cycle[0] in intervals,
                self_compatible=self_ok,
            )
        )
    assert len(seen) == math.comb(n, k)
    return OrbitAtlas(k, n, tuple(orbits))


@dataclass(frozen=True)
class CompatibilityGraph:
    """Self-compatible orbits with pairwise-noncrossing adjacency.

    Vertices are indices into `orbits`, sorted by decreasing weight; `adj`
    holds one bit mask per vertex.  Interval orbits are compatible with
    everything, so they carry full adjacency and are pre-seeded by the
    search.
    """

    atlas: OrbitAtlas
    orbits: tuple[Orbit, ...]
    weights: tuple[int, ...]
    adj: tuple[int, ...]
    interval_vertices: tuple[int, ...]

    @property
    def mandatory_weight(self) -> int:
        return sum(self.weights[v] for v in self.interval_vertices)


def build_compatibility_graph(atlas: OrbitAtlas) -> CompatibilityGraph:
    verts = [o for o in atlas.orbits if o.self_compatible]
    verts.sort(key=lambda o: (-o.size, o.rep))
    weights = tuple(o.size for o in verts)
    m = len(verts)
    adj = [0] * m
    for i in range(m):
        oi = verts[i]
        for j in range(i + 1, m):
            oj = verts[j]
            if oi.is_interval or oj.is_interval:
                ok = True  # intervals never cross anything
            else:
                ok = all(not crossing_masks(oi.masks[0], mj) for mj in oj.masks)
            if ok:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    ivs = tuple(i for i, o in enumerate(verts) if o.is_interval)
    return CompatibilityGraph(atlas, tuple(verts), weights, tuple(adj), ivs)


def _weight_groups(graph: CompatibilityGraph) -> list[tuple[int, int]]:
    groups: dict[int, int] = {}
    for i, w in enumerate(graph.weights):
        groups[w] = groups.get(w, 0) | (1 << i)
    return sorted(groups.items())


def _exact_weight_cliques(graph: CompatibilityGraph, target: int) -> list[list[int]]:
    """All cliques of non-interval vertices with weight sum exactly `target`.

    Vertices come pre-sorted by decreasing weight; candidates are pruned as
    soon as the remaining weight cannot close the deficit.
    """
    weights = graph.weights
    adj = graph.adj
    groups = _weight_groups(graph)

    def weight_sum(mask: int) -> int:
        return sum(w * (mask & grp).bit_count() for w, grp in groups)

    start = 0
    for i, o in enumerate(graph.orbits):
        if not o.is_interval:
            start |= 1 << i

    found: list[list[int]] = []
    stack: list[int] = []

    def rec(cand: int, deficit: int) -> None:
        if deficit == 0:
            found.append(list(stack))
            return
        total = weight_sum(cand)
        while cand:
            if total < deficit:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand &= cand - 1
            total -= weights[v]
            if weights[v] <= deficit:
                stack.append(v)
                rec(cand & adj[v], deficit - weights[v])
                stack.pop()

    rec(start, target)
    return found


def enumerate_symmetric_maximal(
    k: int, n: int, count_only: bool = False, cap: int = ENUM_CAP
) -> Union[int, list[Collection]]:
    """All symmetric maximal (k, n)-noncrossing collections (or their count).

    Deterministic: results come out deduplicated in canonical order.
    """
    atlas = build_atlas(k, n, cap)
    graph = build_compatibility_graph(atlas)
    target = k * (n - k) + 1 - graph.mandatory_weight
    if target < 0:
        return 0 if count_only else []
    cliques = _exact_weight_cliques(graph, target)
    if count_only:
        return len(cliques)
    out = []
    for clique in cliques:
        masks: list[int] = []
        for v in itertools.chain(graph.interval_vertices, clique):
            masks.extend(graph.orbits[v].masks)
        out.append(Collection(n, k, (elems_of(m) for m in masks)))
    out.sort(key=lambda c: c.sets)
    return out


@dataclass(frozen=True)
class ExistenceRow:
    k: int
    n: int
    condition: bool
    count: Optional[int]

    @property
    def agree(self) -> Optional[bool]:
        if self.count is None:
            return None
        return (self.count > 0) == self.condition


def existence_table(max_n: int, count_cap: int = ENUM_CAP) -> list[ExistenceRow]:
    """Condition verdict vs. brute-force existence for all k <= n <= max_n.

    The condition column has no cap; counts are computed only for
    n <= count_cap.
    """
    rows = []
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            cond = condition_star(k, n).satisfied
            count = (
                enumerate_symmetric_maximal(k, n, count_only=True, cap=count_cap)
                if n <= count_cap
                else None
            )
            rows.append(ExistenceRow(k, n, cond, count))
    return rows
