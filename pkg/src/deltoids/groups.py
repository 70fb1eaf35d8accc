"""Arithmetic in finitely generated abelian groups.

A group is presented as Z/n1 x ... x Z/nk x Z^r.  Elements are canonical
integer tuples: torsion coordinates first, reduced into [0, n_i), then the
free coordinates over Z.  The identity is the zero vector.  All values here
are immutable and every operation is a pure function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import gcd, lcm, prod

from .errors import (
    InfiniteSubgroupError,
    InvalidElementError,
    ResourceLimitError,
    UnsupportedInfiniteGroupError,
)

Element = tuple[int, ...]

DEFAULT_ORDER_BOUND = 10_000


@dataclass(frozen=True)
class GroupSpec:
    """An abelian group Z/n1 x ... x Z/nk x Z^r; moduli >= 2, free_rank >= 0.

    The trivial group is torsion=() with free_rank=0.
    """

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(n) for n in self.torsion))
        if any(n < 2 for n in self.torsion):
            raise InvalidElementError(f"torsion moduli must be >= 2, got {self.torsion}")
        if self.free_rank < 0:
            raise InvalidElementError(f"free_rank must be >= 0, got {self.free_rank}")

    @property
    def dimension(self) -> int:
        return len(self.torsion) + self.free_rank

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | float:
        return prod(self.torsion) if self.is_finite else math.inf

    @property
    def identity(self) -> Element:
        return (0,) * self.dimension


def _check_dimension(group: GroupSpec, x) -> None:
    if len(x) != group.dimension:
        raise InvalidElementError(
            f"element of length {len(x)} does not fit group of dimension {group.dimension}"
        )


def canonicalize(group: GroupSpec, coords) -> Element:
    """Reduce torsion coordinates mod n_i; free coordinates pass through."""
    _check_dimension(group, coords)
    k = len(group.torsion)
    head = tuple(int(c) % n for c, n in zip(coords, group.torsion))
    return head + tuple(int(c) for c in coords[k:])


def compose(group: GroupSpec, x: Element, y: Element) -> Element:
    """Group operation: componentwise addition, torsion coordinates mod n_i."""
    _check_dimension(group, x)
    _check_dimension(group, y)
    k = len(group.torsion)
    head = tuple((a + b) % n for a, b, n in zip(x, y, group.torsion))
    return head + tuple(a + b for a, b in zip(x[k:], y[k:]))


def invert(group: GroupSpec, x: Element) -> Element:
    _check_dimension(group, x)
    k = len(group.torsion)
    head = tuple(-a % n for a, n in zip(x, group.torsion))
    return head + tuple(-a for a in x[k:])


def order(group: GroupSpec, x: Element) -> int | float:
    """Least n >= 1 with n*x = 0; math.inf when a free coordinate is nonzero."""
    _check_dimension(group, x)
    k = len(group.torsion)
    if any(c != 0 for c in x[k:]):
        return math.inf
    o = 1
    for c, n in zip(x, group.torsion):
        o = lcm(o, n // gcd(n, c))
    return o


def elements_of(group: GroupSpec) -> list[Element]:
    """All elements of a finite group in lexicographic order."""
    if not group.is_finite:
        raise UnsupportedInfiniteGroupError("cannot enumerate an infinite group")
    return list(product(*(range(n) for n in group.torsion)))


@dataclass(frozen=True)
class Subgroup:
    """A finite subgroup given by its full, canonically sorted element tuple."""

    ambient: GroupSpec
    elements: tuple[Element, ...]

    @cached_property
    def member_set(self) -> frozenset[Element]:
        return frozenset(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.member_set

    def __iter__(self):
        return iter(self.elements)

    def validate(self) -> bool:
        """Direct check: contains identity, closed under compose and invert."""
        g = self.ambient
        members = self.member_set
        if g.identity not in members:
            return False
        for x in self.elements:
            if invert(g, x) not in members:
                return False
            for y in self.elements:
                if compose(g, x, y) not in members:
                    return False
        return True


def generate_subgroup(group: GroupSpec, generators) -> Subgroup:
    """Closure of the generators (plus identity) under the group operation.

    Only defined when the closure is finite: every generator must have all
    free coordinates zero, otherwise InfiniteSubgroupError is raised.
    """
    k = len(group.torsion)
    gens = []
    for g in generators:
        g = canonicalize(group, g)
        if any(c != 0 for c in g[k:]):
            raise InfiniteSubgroupError(f"generator {g} has infinite order")
        gens.append(g)
    elems = {group.identity}
    queue = [group.identity]
    while queue:
        u = queue.pop()
        for g in gens:
            v = compose(group, u, g)
            if v not in elems:
                elems.add(v)
                queue.append(v)
    return Subgroup(group, tuple(sorted(elems)))


def _join(group: GroupSpec, base: frozenset[Element], x: Element) -> frozenset[Element]:
    # Subgroup generated by base (already a subgroup) and one extra element:
    # the union of the translates base + k*x.
    joined = set(base)
    cur = x
    while cur not in joined:
        joined.update(compose(group, h, cur) for h in base)
        cur = compose(group, cur, x)
    return frozenset(joined)


@lru_cache(maxsize=256)
def _enumerate_subgroups_cached(group: GroupSpec, order_bound: int) -> tuple[Subgroup, ...]:
    if not group.is_finite:
        raise UnsupportedInfiniteGroupError("subgroup enumeration needs a finite group")
    if group.order > order_bound:
        raise ResourceLimitError(
            f"group order {group.order} exceeds enumeration bound {order_bound}"
        )
    everything = elements_of(group)
    trivial = frozenset((group.identity,))
    known = {trivial}
    stack = [trivial]
    while stack:
        base = stack.pop()
        for x in everything:
            if x in base:
                continue
            joined = _join(group, base, x)
            if joined not in known:
                known.add(joined)
                stack.append(joined)
    subs = [Subgroup(group, tuple(sorted(h))) for h in known]
    subs.sort(key=lambda h: (len(h.elements), h.elements))
    return tuple(subs)


def enumerate_subgroups(
    group: GroupSpec, order_bound: int = DEFAULT_ORDER_BOUND
) -> list[Subgroup]:
    """Every subgroup of a finite group, each exactly once.

    Computed by closing the trivial subgroup under joins with single
    elements until no new subgroup appears.  Output is sorted by size and
    then lexicographically by element tuple, so it is deterministic.
    Results are cached per group since they never change.
    """
    return list(_enumerate_subgroups_cached(group, order_bound))


def coset_of(group: GroupSpec, x: Element, sub: Subgroup) -> tuple[Element, ...]:
    """The coset x + H as a sorted tuple."""
    return tuple(sorted(compose(group, x, h) for h in sub.elements))


def full_cosets_within(group: GroupSpec, elements, sub: Subgroup) -> tuple[Element, ...]:
    """The union of the H-cosets fully contained in the given finite set.

    Buckets the elements by coset representative and keeps the buckets that
    reach |H|; the result size is always a multiple of |H|.  Works in
    infinite ambient groups since only the finite input set is scanned.
    """
    target = len(sub.elements)
    buckets: dict[Element, list[Element]] = {}
    for a in elements:
        rep = min(compose(group, a, h) for h in sub.elements)
        buckets.setdefault(rep, []).append(a)
    kept: list[Element] = []
    for bucket in buckets.values():
        if len(bucket) == target:
            kept.extend(bucket)
    return tuple(sorted(kept))


def cosets_of(group: GroupSpec, sub: Subgroup) -> list[tuple[Element, ...]]:
    """All cosets of a subgroup in a finite group, ordered by smallest member."""
    seen: set[Element] = set()
    out = []
    for g in elements_of(group):
        if g in seen:
            continue
        coset = coset_of(group, g, sub)
        seen.update(coset)
        out.append(coset)
    return out


# --- group literal syntax ("Z12", "Z2xZ4", "Z2xZ", "Z1" for the trivial group) ---


def parse_group(literal: str) -> GroupSpec:
    """Parse a group literal: cyclic factors "Z<n>", bare "Z" for a free factor.

    Free factors must come last so the coordinate order matches the internal
    layout (torsion first).  "Z1" alone denotes the trivial group.
    """
    text = literal.strip()
    if text == "Z1":
        return GroupSpec((), 0)
    torsion: list[int] = []
    free_rank = 0
    for token in text.split("x"):
        token = token.strip()
        if token == "Z":
            free_rank += 1
            continue
        if not token.startswith("Z") or not token[1:].isdigit():
            raise InvalidElementError(f"bad group literal token {token!r} in {literal!r}")
        n = int(token[1:])
        if n < 2:
            raise InvalidElementError(f"modulus {n} < 2 in group literal {literal!r}")
        if free_rank:
            raise InvalidElementError(
                f"free factors must come last in group literal {literal!r}"
            )
        torsion.append(n)
    return GroupSpec(tuple(torsion), free_rank)


def format_group(group: GroupSpec) -> str:
    if not group.torsion and not group.free_rank:
        return "Z1"
    parts = [f"Z{n}" for n in group.torsion] + ["Z"] * group.free_rank
    return "x".join(parts)
