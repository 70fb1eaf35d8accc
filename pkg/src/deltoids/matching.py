"""Maximum partial matchings and the deficiency of an instance.

Two independent routes to the same number live here: an augmenting-path
maximum matching over the adjacency, and the definitional sweep over all
2^|A| subsets that maximizes |S| - |delta(S)| (the defect form of Hall's
condition).  They are cross-checked against each other in the test suite.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from .errors import InvalidDefectError, ResourceLimitError
from .groups import Element
from .sets import Deltoid

DEFAULT_SUBSET_BOUND = 22


@dataclass(frozen=True)
class Verdict:
    """Outcome of a validity check; falsy with a reason when it fails."""

    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PartialMatching:
    """An injective partial assignment A -> B along the adjacency.

    pairs are (a, b) in canonical order of a; defect = |A| - len(pairs).
    """

    pairs: tuple[tuple[Element, Element], ...]
    defect: int


def _augment(rows, match_of_b, match_of_a, start: int) -> bool:
    # Kuhn's augmenting search; rows are bitmasks, columns scanned ascending.
    visited = 0

    def dfs(i: int) -> bool:
        nonlocal visited
        cand = rows[i] & ~visited
        while cand:
            low = cand & -cand
            j = low.bit_length() - 1
            visited |= low
            owner = match_of_b[j]
            if owner < 0 or dfs(owner):
                match_of_b[j] = i
                match_of_a[i] = j
                return True
            cand = rows[i] & ~visited
        return False

    return dfs(start)


def max_matching(D: Deltoid) -> PartialMatching:
    """A maximum-cardinality partial matching, deterministic for fixed input.

    Rows are augmented in canonical order and columns scanned in canonical
    order, so equal inputs give byte-equal outputs.
    """
    n = D.size
    rows = D.rows
    match_of_b = [-1] * n
    match_of_a = [-1] * n
    size = 0
    for i in range(n):
        if _augment(rows, match_of_b, match_of_a, i):
            size += 1
    a_elems = D.A.elements
    b_elems = D.B.elements
    pairs = tuple(
        (a_elems[i], b_elems[match_of_a[i]]) for i in range(n) if match_of_a[i] >= 0
    )
    return PartialMatching(pairs, n - size)


def deficiency(D: Deltoid) -> int:
    """Smallest achievable defect: |A| minus the maximum matching size."""
    return max_matching(D).defect


def partial_matching_with_defect(D: Deltoid, d: int) -> PartialMatching | None:
    """A matching with defect exactly d, or None when d is below the deficiency."""
    if not 0 <= d <= D.size:
        raise InvalidDefectError(f"defect {d} outside 0..{D.size}")
    best = max_matching(D)
    if d < best.defect:
        return None
    keep = D.size - d
    return PartialMatching(best.pairs[:keep], d)


def deficiency_by_subsets(D: Deltoid, subset_bound: int = DEFAULT_SUBSET_BOUND) -> int:
    """Definitional oracle: max over all S of |S| - |delta(S)|.

    Walks all 2^|A| subsets with an incremental-OR table, so each subset
    costs O(1) bit operations.  Refuses instances above subset_bound.
    """
    n = D.size
    if n > subset_bound:
        raise ResourceLimitError(f"|A| = {n} exceeds subset sweep bound {subset_bound}")
    rows = D.rows
    table = array("Q", bytes(8 << n))
    best = 0
    for m in range(1, 1 << n):
        low = m & -m
        t = table[m ^ low] | rows[low.bit_length() - 1]
        table[m] = t
        v = m.bit_count() - t.bit_count()
        if v > best:
            best = v
    return best


def verify_matching(D: Deltoid, f: PartialMatching) -> Verdict:
    """Check injectivity, adjacency membership, and defect bookkeeping."""
    a_index = D.a_index
    b_index = D.b_index
    seen_a: set[int] = set()
    seen_b: set[int] = set()
    for a, b in f.pairs:
        i = a_index.get(a)
        if i is None:
            return Verdict(False, f"domain element {a} is not in A")
        j = b_index.get(b)
        if j is None:
            return Verdict(False, f"range element {b} is not in B")
        if i in seen_a:
            return Verdict(False, f"domain element {a} is used twice")
        if j in seen_b:
            return Verdict(False, f"range element {b} is used twice")
        seen_a.add(i)
        seen_b.add(j)
        if not D.adjacent(i, j):
            return Verdict(False, f"pair ({a}, {b}) lands back inside A")
    if f.defect != D.size - len(f.pairs):
        return Verdict(
            False, f"defect {f.defect} != |A| - pairs = {D.size - len(f.pairs)}"
        )
    return Verdict(True)
