"""Shared fixtures and independent brute-force oracles for the test suite.

The oracles here deliberately avoid the library's bitmask machinery: they
recompute neighborhoods with plain sets and search matchings by trying
injections, so agreement with the library is a real cross-check.
"""

from itertools import combinations, permutations, product

from deltoids import (
    Deltoid,
    GroupSet,
    GroupSpec,
    build_deltoid,
    compose,
    cosets_of,
    elements_of,
    enumerate_subgroups,
)

Z3 = GroupSpec((3,))
Z6 = GroupSpec((6,))
Z8 = GroupSpec((8,))
Z9 = GroupSpec((9,))
Z12 = GroupSpec((12,))
Z2xZ4 = GroupSpec((2, 4))
Z2xZ2 = GroupSpec((2, 2))
Z2xZ = GroupSpec((2,), 1)
TRIVIAL = GroupSpec((), 0)

GOLDEN_A = [(0,), (1,), (2,), (4,), (6,), (8,), (10,), (11,)]
GOLDEN_B = [(1,), (2,), (3,), (4,), (6,), (8,), (10,), (11,)]


def cyc(*values):
    """Wrap plain integers as one-coordinate elements."""
    return [(v,) for v in values]


def gset(group, items):
    return GroupSet.of(group, items)


def golden_deltoid() -> Deltoid:
    """The shipped Z12 instance with deficiency 3 and rho 3."""
    return build_deltoid(gset(Z12, GOLDEN_A), gset(Z12, GOLDEN_B))


def universe_for(group, span=3):
    """All candidate elements; free coordinates restricted to [-span, span]."""
    if group.is_finite:
        return elements_of(group)
    ranges = [range(n) for n in group.torsion]
    ranges += [range(-span, span + 1)] * group.free_rank
    return [tuple(p) for p in product(*ranges)]


def exhaustive_instances(group=Z6, sizes=(1, 2, 3)):
    """Every instance (A, B) over the group with |A| = |B| in sizes, 0 not in B."""
    uni = elements_of(group)
    nonzero = [e for e in uni if e != group.identity]
    for size in sizes:
        for a_elems in combinations(uni, size):
            A = GroupSet(group, a_elems)
            for b_elems in combinations(nonzero, size):
                yield build_deltoid(A, GroupSet(group, b_elems))


def random_instance(rng, group, max_size=8, span=3, identity_in_a=True):
    """One seeded random instance; B never contains the identity."""
    uni = universe_for(group, span)
    pool_b = [e for e in uni if e != group.identity]
    pool_a = uni if identity_in_a else pool_b
    n = rng.randint(1, min(max_size, len(pool_b), len(pool_a)))
    A = rng.sample(pool_a, n)
    B = rng.sample(pool_b, n)
    return build_deltoid(GroupSet.of(group, A), GroupSet.of(group, B))


def random_witnessed_instance(rng, group=Z12):
    """A seeded instance shaped like an obstruction: coset-heavy A, subgroup-heavy B.

    A is a union of whole subgroup cosets plus a nonempty remainder, B starts
    from the subgroup's nonidentity part; such pairs are usually deficient
    while keeping the right partition number finite.
    """
    subs = [h for h in enumerate_subgroups(group) if 1 < len(h.elements) < group.order]
    sub = rng.choice(subs)
    all_cosets = cosets_of(group, sub)
    q = rng.randint(1, len(all_cosets) - 1)
    size = len(elements_of(group))
    while size - 1 - q * len(sub.elements) < 1:
        q -= 1
    s_elems = [x for coset in rng.sample(all_cosets, q) for x in coset]
    taken = set(s_elems)
    rest = [x for x in elements_of(group) if x not in taken]
    max_extra = min(2, size - 1 - len(s_elems))
    y_elems = rng.sample(rest, rng.randint(1, max_extra))
    A = GroupSet.of(group, s_elems + y_elems)
    n = len(A.elements)
    r_elems = [x for x in sub.elements if x != group.identity]
    pool = [
        x
        for x in elements_of(group)
        if x != group.identity and x not in set(r_elems)
    ]
    z_elems = rng.sample(pool, n - len(r_elems))
    B = GroupSet.of(group, r_elems + z_elems)
    return build_deltoid(A, B)


def brute_delta_elems(D, s_elems):
    """Neighborhood recomputed with plain sets: b with some s*b outside A."""
    group = D.A.group
    members = set(D.A.elements)
    return {
        b
        for b in D.B.elements
        if any(compose(group, s, b) not in members for s in s_elems)
    }


def brute_deficiency(D):
    """Smallest defect found by trying every injection; exponential, tiny n only."""
    n = D.size
    for size in range(n, 0, -1):
        for rows in combinations(range(n), size):
            for cols in permutations(range(n), size):
                if all(D.adjacent(i, j) for i, j in zip(rows, cols)):
                    return n - size
    return n


def subsets_of(elems):
    for size in range(len(elems) + 1):
        yield from combinations(elems, size)


def stabilizer_pairs(D):
    """Every pair (S, R) with S in A, R in B + identity, S*R = S, as frozensets."""
    group = D.A.group
    b_plus = sorted(set(D.B.elements) | {group.identity})
    for s_elems in subsets_of(D.A.elements):
        s_set = frozenset(s_elems)
        for r_elems in subsets_of(b_plus):
            if not r_elems and s_elems:
                continue  # S*empty is empty, not S
            if all(
                compose(group, s, r) in s_set for s in s_elems for r in r_elems
            ):
                yield s_set, frozenset(r_elems)


def ceil_div(a, b):
    return -(-a // b)


def left_inequality_holds(D, k):
    """Brute check of |S| <= k * |delta(S)| over all subsets of A."""
    for s_elems in subsets_of(D.A.elements):
        if len(s_elems) > k * len(brute_delta_elems(D, s_elems)):
            return False
    return True


def right_inequality_holds(D, k):
    """Brute check of k|S| + |B| <= k|A| + |delta(S)| over all subsets of A."""
    n = D.size
    for s_elems in subsets_of(D.A.elements):
        if k * len(s_elems) + n > k * n + len(brute_delta_elems(D, s_elems)):
            return False
    return True
