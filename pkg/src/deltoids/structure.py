"""Obstruction witnesses and construction of pairs with forced deficiency.

A witness splits A = S + Y and B = R + Z (disjoint unions) with S a
nonempty union of <R>-cosets and |Y| < |R| - level; its existence is
equivalent to the deficiency exceeding the level.  This module searches
for witnesses, verifies them without running any matching, and builds
pairs of prescribed size whose deficiency exceeds a prescribed level.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InfiniteSubgroupError,
    InternalConstructorError,
    InvalidParametersError,
    NoConstructionError,
)
from .groups import (
    DEFAULT_ORDER_BOUND,
    GroupSpec,
    Subgroup,
    cosets_of,
    elements_of,
    enumerate_subgroups,
    full_cosets_within,
    generate_subgroup,
)
from .matching import Verdict
from .sets import Deltoid, GroupSet


@dataclass(frozen=True)
class ObstructionWitness:
    """Decomposition A = S + Y, B = R + Z certifying deficiency > level."""

    S: GroupSet
    R: GroupSet
    Y: GroupSet
    Z: GroupSet
    level: int


def find_witness(
    D: Deltoid, level: int, order_bound: int = DEFAULT_ORDER_BOUND
) -> ObstructionWitness | None:
    """First witness in canonical subgroup order, or None when none exists.

    For each subgroup H the only candidates worth trying are R = B n H and
    S = the full H-cosets inside A: shrinking R weakens |R| - level and S
    cannot grow past the full cosets.  A witness exists for some (S, R) iff
    one exists of this restricted shape.
    """
    if level < 0:
        raise InvalidParametersError("level must be nonnegative")
    group = D.A.group
    for sub in enumerate_subgroups(group, order_bound):
        r_elems = tuple(b for b in D.B.elements if b in sub.member_set)
        if not r_elems:
            continue
        s_elems = full_cosets_within(group, D.A.elements, sub)
        if not s_elems:
            continue
        y_count = D.size - len(s_elems)
        if y_count < len(r_elems) - level:
            S = GroupSet(group, s_elems)
            R = GroupSet(group, r_elems)
            return ObstructionWitness(
                S=S,
                R=R,
                Y=D.A.difference(S),
                Z=D.B.difference(R),
                level=level,
            )
    return None


def verify_witness(D: Deltoid, w: ObstructionWitness) -> Verdict:
    """Check every witness invariant; a passing witness proves deficiency > level.

    No matching is run: the verdict rests only on the decomposition shape.
    """
    group = D.A.group
    for name, part in (("S", w.S), ("R", w.R), ("Y", w.Y), ("Z", w.Z)):
        if part.group != group:
            return Verdict(False, f"{name} lives in a different group")
    if w.level < 0:
        return Verdict(False, "level must be nonnegative")
    if w.S.member_set & w.Y.member_set:
        return Verdict(False, "S and Y overlap")
    if w.S.union(w.Y) != D.A:
        return Verdict(False, "S and Y do not partition A")
    if w.R.member_set & w.Z.member_set:
        return Verdict(False, "R and Z overlap")
    if w.R.union(w.Z) != D.B:
        return Verdict(False, "R and Z do not partition B")
    if not w.R.elements:
        return Verdict(False, "R is empty")
    if not w.S.elements:
        return Verdict(False, "S is empty")
    try:
        sub = generate_subgroup(group, w.R.elements)
    except InfiniteSubgroupError:
        return Verdict(False, "R generates an infinite subgroup")
    if full_cosets_within(group, w.S.elements, sub) != w.S.elements:
        return Verdict(False, "S is not a union of cosets of the subgroup R generates")
    if not len(w.Y.elements) < len(w.R.elements) - w.level:
        return Verdict(
            False,
            f"|Y| = {len(w.Y.elements)} is not below |R| - level = "
            f"{len(w.R.elements) - w.level}",
        )
    return Verdict(True)


def _proper_nontrivial(
    group: GroupSpec, order_bound: int
) -> tuple[list[Subgroup], int]:
    subs = enumerate_subgroups(group, order_bound)
    whole = group.order
    proper = [h for h in subs if 1 < len(h.elements) < whole]
    if not proper:
        raise InvalidParametersError("group has no nontrivial proper subgroup")
    return proper, len(proper[0].elements)


def existence_predicate(
    group: GroupSpec, n: int, level: int, order_bound: int = DEFAULT_ORDER_BOUND
) -> Subgroup | None:
    """A subgroup H with |H| <= n and |H| dividing none of n+1 .. n+level+1.

    Such a subgroup exists iff some pair (A, B) with |A| = |B| = n and the
    identity outside B has deficiency above the level.  Returns the
    smallest qualifying subgroup (canonical tie-break) or None.
    """
    if not group.is_finite:
        raise InvalidParametersError("existence search needs a finite group")
    if level < 0:
        raise InvalidParametersError("level must be nonnegative")
    proper, n0 = _proper_nontrivial(group, order_bound)
    if not n0 <= n < group.order:
        raise InvalidParametersError(
            f"n must satisfy {n0} <= n < {group.order}, got {n}"
        )
    for sub in proper:
        m = len(sub.elements)
        if m > n:
            continue
        if all((n + j) % m for j in range(1, level + 2)):
            return sub
    return None


def construct_deficient_pair(
    group: GroupSpec, n: int, level: int, order_bound: int = DEFAULT_ORDER_BOUND
) -> tuple[GroupSet, GroupSet]:
    """Build (A, B) with |A| = |B| = n, identity outside B, deficiency > level.

    With H the qualifying subgroup and n = |H|q + r: A is the first q
    cosets of H plus the first r leftover elements, B is H minus the
    identity plus the first n - |H| + 1 elements outside H's nonidentity
    part.  All free choices go to the smallest elements, so the output is
    deterministic.
    """
    sub = existence_predicate(group, n, level, order_bound)
    if sub is None:
        raise NoConstructionError(
            f"no subgroup qualifies for n = {n}, level = {level}"
        )
    m = len(sub.elements)
    q, r = divmod(n, m)
    cosets = cosets_of(group, sub)
    s_elems = sorted(x for coset in cosets[:q] for x in coset)
    s_set = set(s_elems)
    everything = elements_of(group)
    y_elems = [x for x in everything if x not in s_set][:r]
    if len(y_elems) < r:
        raise InternalConstructorError("ran out of elements for Y")
    identity = group.identity
    r_elems = [x for x in sub.elements if x != identity]
    excluded = set(r_elems) | {identity}
    z_count = n - m + 1
    z_elems = [x for x in everything if x not in excluded][:z_count]
    if len(z_elems) < z_count:
        raise InternalConstructorError("ran out of elements for Z")
    A = GroupSet.of(group, s_elems + y_elems)
    B = GroupSet.of(group, r_elems + z_elems)
    if len(A.elements) != n or len(B.elements) != n:
        raise InternalConstructorError("constructed sets have the wrong size")
    return A, B
