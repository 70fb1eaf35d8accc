"""The Dyson e-transform and the subgroup-indexed route to the deficiency.

The transform grows S and shrinks R while preserving |S| + |R|, stopping
once S*R = S.  Stabilized pairs are exactly the unions of cosets of <R>,
which reduces the pair-indexed deficiency formula to a single maximization
over subgroups; that reduction is certified against exhaustive pair
enumeration in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    GroupMismatchError,
    InvalidInputError,
    InvalidWitnessError,
    UnsupportedInfiniteGroupError,
)
from .groups import (
    DEFAULT_ORDER_BOUND,
    Element,
    canonicalize,
    compose,
    enumerate_subgroups,
    full_cosets_within,
    invert,
)
from .matching import Verdict
from .sets import Deltoid, GroupSet


@dataclass(frozen=True)
class StabilizerPair:
    """A pair (S, R) with S*R = S, scored by |S| - |B \\ R|."""

    S: GroupSet
    R: GroupSet
    value: int

    def validate(self, D: Deltoid) -> Verdict:
        group = D.A.group
        if not self.S.issubset(D.A):
            return Verdict(False, "S is not a subset of A")
        b_or_identity = D.B.union(GroupSet.of(group, [group.identity]))
        if not self.R.issubset(b_or_identity):
            return Verdict(False, "R is not a subset of B plus identity")
        s_members = self.S.member_set
        for s in self.S.elements:
            for r in self.R.elements:
                if compose(group, s, r) not in s_members:
                    return Verdict(False, f"{s}*{r} leaves S, so S*R != S")
        expected = len(self.S.elements) - len(D.B.difference(self.R).elements)
        if self.value != expected:
            return Verdict(False, f"value {self.value} != |S| - |B \\ R| = {expected}")
        return Verdict(True)


def e_transform_step(
    S: GroupSet, R: GroupSet, e: Element, r: Element
) -> tuple[GroupSet, GroupSet]:
    """One transform step: S1 = S union e*R, R1 = R intersect S*e^-1.

    Requires the identity in R, e in S, r in R, and e*r outside S (the
    witness that S*R != S).  The step conserves |S| + |R| and strictly
    grows S.
    """
    group = S.group
    if R.group != group:
        raise GroupMismatchError("S and R live in different groups")
    e = canonicalize(group, e)
    r = canonicalize(group, r)
    if group.identity not in R:
        raise InvalidWitnessError("identity must be in R")
    if e not in S:
        raise InvalidWitnessError(f"e = {e} is not in S")
    if r not in R:
        raise InvalidWitnessError(f"r = {r} is not in R")
    if compose(group, e, r) in S:
        raise InvalidWitnessError(f"e*r = {compose(group, e, r)} is in S; not a witness")
    e_inv = invert(group, e)
    s1 = GroupSet.of(group, list(S.elements) + [compose(group, e, x) for x in R.elements])
    shifted = {compose(group, s, e_inv) for s in S.elements}
    r1 = GroupSet(group, tuple(x for x in R.elements if x in shifted))
    # conservation |S1| + |R1| = |S| + |R| is forced; anything else is a bug
    assert len(s1.elements) + len(r1.elements) == len(S.elements) + len(R.elements)
    return s1, r1


def _find_witness_pair(S: GroupSet, R: GroupSet) -> tuple[Element, Element] | None:
    # First (e, r) in canonical order with e*r outside S; None when S*R = S.
    group = S.group
    members = S.member_set
    for e in S.elements:
        for r in R.elements:
            if compose(group, e, r) not in members:
                return e, r
    return None


def stabilize(A: GroupSet, S: GroupSet, R: GroupSet) -> tuple[GroupSet, GroupSet]:
    """Iterate the e-transform until S*R = S.

    Requires nonempty S and R, the identity in R, and S*R inside A.  The
    result (S', R') satisfies S within S'*R' = S' within A, identity in
    R' within R, and |S'| + |R'| = |S| + |R|.  Terminates because S grows
    strictly inside the finite set A.
    """
    group = A.group
    if S.group != group or R.group != group:
        raise GroupMismatchError("A, S, R must live in one group")
    if not S.elements or not R.elements:
        raise InvalidInputError("S and R must be nonempty")
    if group.identity not in R:
        raise InvalidInputError("identity must be in R")
    members = A.member_set
    for s in S.elements:
        for r in R.elements:
            if compose(group, s, r) not in members:
                raise InvalidInputError(f"S*R leaves A at {s}*{r}")
    while True:
        witness = _find_witness_pair(S, R)
        if witness is None:
            return S, R
        S, R = e_transform_step(S, R, *witness)


def _subgroup_terms(D: Deltoid, order_bound: int):
    # Yields (H, full-coset part of A, B intersect H) over all subgroups.
    group = D.A.group
    if not group.is_finite:
        raise UnsupportedInfiniteGroupError("subgroup formulas need a finite group")
    for sub in enumerate_subgroups(group, order_bound):
        inside = GroupSet(group, tuple(b for b in D.B.elements if b in sub.member_set))
        full = GroupSet(group, full_cosets_within(group, D.A.elements, sub))
        yield sub, full, inside


def deficiency_by_subgroups(D: Deltoid, order_bound: int = DEFAULT_ORDER_BOUND) -> int:
    """Deficiency as a maximum over subgroups H.

    Each H contributes |full H-cosets inside A| - |B| + |B intersect H|;
    the trivial subgroup contributes 0, so the result is never negative.
    Only the stabilized pairs (S = full coset union, R = (B n H) + identity)
    can attain the pair-formula maximum, which makes this exact.
    """
    n = D.size
    best = None
    for _, full, inside in _subgroup_terms(D, order_bound):
        value = len(full.elements) - n + len(inside.elements)
        if best is None or value > best:
            best = value
    return best


def best_stabilizer_pair(
    D: Deltoid, order_bound: int = DEFAULT_ORDER_BOUND
) -> StabilizerPair:
    """A witnessing pair attaining the subgroup maximum.

    Scans subgroups in canonical order (size, then element order) and keeps
    the first maximizer, so the returned pair is deterministic.
    """
    group = D.A.group
    n = D.size
    best = None
    for sub, full, inside in _subgroup_terms(D, order_bound):
        value = len(full.elements) - n + len(inside.elements)
        if best is None or value > best[0]:
            best = (value, full, inside)
    value, full, inside = best
    paired_r = GroupSet.of(group, list(inside.elements) + [group.identity])
    return StabilizerPair(full, paired_r, value)
