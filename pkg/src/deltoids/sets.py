"""Finite subsets of a group and validated matching instances.

A matching instance is a pair (A, B) of equal-size finite subsets with the
identity excluded from B.  Its edge set pairs a in A with b in B whenever
a*b falls outside A.  The adjacency is stored one bitmask per row of A
(bit j of row i set iff a_i * b_j lies outside A), which makes the subset
sweeps elsewhere in the package cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    EmptySetError,
    GroupMismatchError,
    IdentityInBError,
    NotASubsetError,
    SizeMismatchError,
)
from .groups import Element, GroupSpec, canonicalize, compose, order


@dataclass(frozen=True)
class GroupSet:
    """A deduplicated, canonically sorted finite subset of a group.

    Build one with :meth:`of`; the raw constructor trusts its input.
    """

    group: GroupSpec
    elements: tuple[Element, ...]

    @classmethod
    def of(cls, group: GroupSpec, elements) -> "GroupSet":
        canon = sorted({canonicalize(group, e) for e in elements})
        return cls(group, tuple(canon))

    @cached_property
    def member_set(self) -> frozenset[Element]:
        return frozenset(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.member_set

    def _same_group(self, other: "GroupSet") -> None:
        if self.group != other.group:
            raise GroupMismatchError("sets live in different groups")

    def union(self, other: "GroupSet") -> "GroupSet":
        self._same_group(other)
        return GroupSet(self.group, tuple(sorted(self.member_set | other.member_set)))

    def intersection(self, other: "GroupSet") -> "GroupSet":
        self._same_group(other)
        return GroupSet(self.group, tuple(sorted(self.member_set & other.member_set)))

    def difference(self, other: "GroupSet") -> "GroupSet":
        self._same_group(other)
        return GroupSet(self.group, tuple(sorted(self.member_set - other.member_set)))

    def issubset(self, other: "GroupSet") -> bool:
        self._same_group(other)
        return self.member_set <= other.member_set


@dataclass(frozen=True)
class Deltoid:
    """Validated instance (A, B) with its full adjacency, one bitmask per row."""

    A: GroupSet
    B: GroupSet
    rows: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.A.elements)

    @cached_property
    def a_index(self) -> dict[Element, int]:
        return {a: i for i, a in enumerate(self.A.elements)}

    @cached_property
    def b_index(self) -> dict[Element, int]:
        return {b: j for j, b in enumerate(self.B.elements)}

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    @property
    def adjacency(self) -> tuple[tuple[bool, ...], ...]:
        """The dense boolean matrix, row a, column b."""
        n = self.size
        return tuple(tuple(bool(r >> j & 1) for j in range(n)) for r in self.rows)

    def row_positions(self, S: GroupSet) -> list[int]:
        """Row indices of a subset of A; NotASubsetError otherwise."""
        if S.group != self.A.group:
            raise NotASubsetError("subset lives in a different group")
        idx = self.a_index
        try:
            return [idx[a] for a in S.elements]
        except KeyError as missing:
            raise NotASubsetError(f"{missing.args[0]} is not in A") from None

    def column_set(self, mask: int) -> GroupSet:
        """Decode a column bitmask into the corresponding subset of B."""
        b = self.B.elements
        picked = []
        while mask:
            low = mask & -mask
            picked.append(b[low.bit_length() - 1])
            mask ^= low
        return GroupSet(self.B.group, tuple(picked))


def build_deltoid(A: GroupSet, B: GroupSet) -> Deltoid:
    """Validate (A, B) and materialize the adjacency.

    Raises GroupMismatchError, EmptySetError, SizeMismatchError, or
    IdentityInBError when the instance is malformed.
    """
    if A.group != B.group:
        raise GroupMismatchError("A and B live in different groups")
    if not A.elements or not B.elements:
        raise EmptySetError("A and B must be nonempty")
    if len(A.elements) != len(B.elements):
        raise SizeMismatchError(f"|A| = {len(A.elements)} but |B| = {len(B.elements)}")
    if A.group.identity in B:
        raise IdentityInBError("the identity element may not appear in B")
    group = A.group
    members = A.member_set
    rows = []
    for a in A.elements:
        bits = 0
        for j, b in enumerate(B.elements):
            if compose(group, a, b) not in members:
                bits |= 1 << j
        rows.append(bits)
    return Deltoid(A, B, tuple(rows))


def delta_mask(D: Deltoid, S: GroupSet) -> int:
    """Column bitmask of the neighborhood of S (b such that some s*b leaves A)."""
    mask = 0
    for i in D.row_positions(S):
        mask |= D.rows[i]
    return mask


def delta_set(D: Deltoid, S: GroupSet) -> GroupSet:
    """The set of b in B with S*b not contained in A; empty for empty S."""
    return D.column_set(delta_mask(D, S))


def u_set(D: Deltoid, S: GroupSet) -> GroupSet:
    """The complement of delta_set in B: the b with S*b inside A."""
    return D.column_set(D.full_mask & ~delta_mask(D, S))


def max_progression_length(A: GroupSet, x) -> int:
    """Longest run a, a*x, ..., a*x^(n-1) inside A with n-1 < order(x).

    Scans every start point; returns at least 1 for nonempty A and is
    capped at order(x) when a whole orbit of x lies inside A.
    """
    group = A.group
    x = canonicalize(group, x)
    ox = order(group, x)
    members = A.member_set
    best = 1
    for a in A.elements:
        length = 1
        cur = a
        while length < ox:
            cur = compose(group, cur, x)
            if cur not in members:
                break
            length += 1
        if length > best:
            best = length
    return best


def chowla_defect(B: GroupSet) -> int:
    """Number of elements of B whose order does not exceed |B|.

    This is the least d for which B is a d-defective Chowla set: all but at
    most d elements have order above |B|; zero means B is a Chowla set.
    """
    n = len(B.elements)
    return sum(1 for x in B.elements if order(B.group, x) <= n)
