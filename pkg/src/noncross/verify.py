"""Independent verification of collections against the cardinality criterion.

Maximality is decided by |C| = k(n-k)+1 among pairwise-noncrossing
collections; an inclusion-based brute force is kept as a small-n oracle so
that any disagreement surfaces as a test failure rather than silent
behavior.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .crossing import Collection, crossing_masks, find_crossing_pair, is_symmetric
from .cyclic import InvalidRange, cyclic_intervals, mask_of

#: Ground-size cap for the inclusion-maximality brute force.
BRUTE_FORCE_CAP = 12


class CapExceeded(ValueError):
    """Input too large for an exhaustive check."""


@dataclass(frozen=True)
class VerifyReport:
    n: int
    k: int
    sizes_ok: bool
    size_error: Optional[str]
    pairwise_noncrossing: bool
    crossing_witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]]
    cardinality: int
    cardinality_required: int
    symmetric: bool
    contains_all_intervals: bool
    missing_interval: Optional[tuple[int, ...]]
    expect_symmetric: bool

    @property
    def cardinality_ok(self) -> bool:
        return self.cardinality == self.cardinality_required

    @property
    def maximal(self) -> bool:
        # the working criterion: noncrossing + the exact cardinality
        return self.pairwise_noncrossing and self.cardinality_ok

    @property
    def ok(self) -> bool:
        checks = [
            self.sizes_ok,
            self.pairwise_noncrossing,
            self.cardinality_ok,
            self.contains_all_intervals,
        ]
        if self.expect_symmetric:
            checks.append(self.symmetric)
        return all(checks)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "sizes_ok": self.sizes_ok,
            "size_error": self.size_error,
            "pairwise_noncrossing": self.pairwise_noncrossing,
            "crossing_witness": (
                [list(s) for s in self.crossing_witness] if self.crossing_witness else None
            ),
            "cardinality": self.cardinality,
            "cardinality_required": self.cardinality_required,
            "cardinality_ok": self.cardinality_ok,
            "maximal": self.maximal,
            "symmetric": self.symmetric,
            "contains_all_intervals": self.contains_all_intervals,
            "missing_interval": (
                list(self.missing_interval) if self.missing_interval else None
            ),
            "expect_symmetric": self.expect_symmetric,
            "ok": self.ok,
        }

    def lines(self) -> list[str]:
        out = [
            f"ground: n={self.n} k={self.k}",
            f"sizes_ok: {self.sizes_ok}" + (f" ({self.size_error})" if self.size_error else ""),
            f"pairwise_noncrossing: {self.pairwise_noncrossing}"
            + (f" witness={self.crossing_witness}" if self.crossing_witness else ""),
            f"cardinality: {self.cardinality} (required {self.cardinality_required})",
            f"maximal: {self.maximal}",
            f"symmetric: {self.symmetric}",
            f"contains_all_intervals: {self.contains_all_intervals}"
            + (f" missing={self.missing_interval}" if self.missing_interval else ""),
            f"ok: {self.ok}",
        ]
        return out


def verify(C: Collection, expect_symmetric: bool = False) -> VerifyReport:
    """Check a collection; failures land in report fields, never exceptions."""
    witness = find_crossing_pair(C)
    members = C.member_set()
    missing = None
    for interval in cyclic_intervals(C.k, C.n):
        if interval not in members:
            missing = interval
            break
    return VerifyReport(
        n=C.n,
        k=C.k,
        sizes_ok=True,
        size_error=None,
        pairwise_noncrossing=witness is None,
        crossing_witness=witness,
        cardinality=len(C),
        cardinality_required=C.k * (C.n - C.k) + 1,
        symmetric=is_symmetric(C),
        contains_all_intervals=missing is None,
        missing_interval=missing,
        expect_symmetric=expect_symmetric,
    )


def verify_raw(n: int, k: int, sets, expect_symmetric: bool = False) -> VerifyReport:
    """Like verify() but tolerant of syntactically broken external input."""
    try:
        C = Collection(n, k, sets)
    except InvalidRange as exc:
        return VerifyReport(
            n=n,
            k=k,
            sizes_ok=False,
            size_error=str(exc),
            pairwise_noncrossing=False,
            crossing_witness=None,
            cardinality=len(list(sets)),
            cardinality_required=k * (n - k) + 1,
            symmetric=False,
            contains_all_intervals=False,
            missing_interval=None,
            expect_symmetric=expect_symmetric,
        )
    return verify(C, expect_symmetric)


def inclusion_maximal_bruteforce(C: Collection, cap: int = BRUTE_FORCE_CAP) -> bool:
    """True iff no k-subset outside C is noncrossing with every member.

    Exhaustive over all C(n, k) subsets; refuses n beyond `cap`.
    """
    if C.n > cap:
        raise CapExceeded(f"n={C.n} exceeds brute-force cap {cap}")
    members = set(C.masks)
    masks = C.masks
    for combo in itertools.combinations(range(1, C.n + 1), C.k):
        m = mask_of(combo)
        if m in members:
            continue
        if all(not crossing_masks(m, other) for other in masks):
            return False
    return True
