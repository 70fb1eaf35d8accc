"""Group arithmetic, subgroup enumeration, and coset machinery."""

import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltoids import (
    GroupSpec,
    InfiniteSubgroupError,
    InvalidElementError,
    ResourceLimitError,
    Subgroup,
    UnsupportedInfiniteGroupError,
    canonicalize,
    compose,
    elements_of,
    enumerate_subgroups,
    format_group,
    full_cosets_within,
    generate_subgroup,
    invert,
    order,
    parse_group,
)
from helpers import GOLDEN_A, TRIVIAL, Z2xZ, Z2xZ2, Z2xZ4, Z6, Z12, cyc


def test_compose_examples():
    assert compose(Z12, (4,), (8,)) == (0,)
    assert compose(Z12, (10,), (3,)) == (1,)
    assert compose(Z2xZ, (1, 5), (1, -2)) == (0, 3)


def test_compose_dimension_mismatch():
    with pytest.raises(InvalidElementError):
        compose(Z12, (1, 2), (3,))


def test_invert_examples():
    assert invert(Z12, (5,)) == (7,)
    assert invert(Z12, (0,)) == (0,)
    assert invert(GroupSpec((), 1), (3,)) == (-3,)
    for x in elements_of(Z2xZ4):
        assert compose(Z2xZ4, x, invert(Z2xZ4, x)) == Z2xZ4.identity


def test_order_examples():
    assert order(Z12, (2,)) == 6
    assert order(Z12, (11,)) == 12
    assert order(Z2xZ, (1, 1)) == math.inf
    assert order(Z2xZ, (1, 0)) == 2
    assert order(Z12, (0,)) == 1


def test_order_divides_group_order():
    for group in (Z12, Z2xZ4):
        for x in elements_of(group):
            assert group.order % order(group, x) == 0


@given(st.lists(st.integers(-40, 40), min_size=2, max_size=2))
@settings(max_examples=60, derandomize=True)
def test_canonicalize_idempotent_z2xz4(coords):
    once = canonicalize(Z2xZ4, coords)
    assert canonicalize(Z2xZ4, once) == once
    assert all(0 <= c < n for c, n in zip(once, Z2xZ4.torsion))


@given(st.lists(st.integers(-40, 40), min_size=2, max_size=2))
@settings(max_examples=60, derandomize=True)
def test_canonicalize_idempotent_z2xz(coords):
    once = canonicalize(Z2xZ, coords)
    assert canonicalize(Z2xZ, once) == once


def test_group_spec_validation():
    with pytest.raises(InvalidElementError):
        GroupSpec((1,))
    with pytest.raises(InvalidElementError):
        GroupSpec((), -1)
    assert TRIVIAL.order == 1
    assert TRIVIAL.identity == ()


def test_generate_subgroup_examples():
    assert generate_subgroup(Z12, cyc(2, 4, 6, 8, 10)).elements == tuple(
        cyc(0, 2, 4, 6, 8, 10)
    )
    assert generate_subgroup(Z12, []).elements == ((0,),)
    assert generate_subgroup(Z12, cyc(3)).elements == tuple(cyc(0, 3, 6, 9))


def test_generate_subgroup_infinite_refusal():
    with pytest.raises(InfiniteSubgroupError):
        generate_subgroup(Z2xZ, [(0, 1)])
    # zero free coordinates are fine even when the ambient group is infinite
    assert generate_subgroup(Z2xZ, [(1, 0)]).elements == ((0, 0), (1, 0))


def test_generate_subgroup_closed_for_small_generating_sets():
    elems = elements_of(Z12)
    for size in range(4):
        for gens in combinations(elems, size):
            assert generate_subgroup(Z12, gens).validate()


def test_enumerate_subgroups_orders():
    assert [len(h.elements) for h in enumerate_subgroups(Z12)] == [1, 2, 3, 4, 6, 12]
    assert len(enumerate_subgroups(Z2xZ2)) == 5
    assert len(enumerate_subgroups(TRIVIAL)) == 1


def test_enumerate_subgroups_errors():
    with pytest.raises(UnsupportedInfiniteGroupError):
        enumerate_subgroups(Z2xZ)
    with pytest.raises(ResourceLimitError):
        enumerate_subgroups(Z12, order_bound=11)


def test_enumerate_subgroups_are_exactly_closure_fixed_points():
    # A subset appears iff generating from it gives it back; exhaustive check.
    for group in (Z6, Z2xZ2, Z12, Z2xZ4):
        listed = {h.elements for h in enumerate_subgroups(group)}
        elems = elements_of(group)
        fixed = set()
        for size in range(1, len(elems) + 1):
            for subset in combinations(elems, size):
                if group.identity not in subset:
                    continue
                if generate_subgroup(group, subset).elements == subset:
                    fixed.add(subset)
        assert listed == fixed


def test_enumerate_subgroups_sorted_and_unique():
    subs = enumerate_subgroups(Z2xZ4)
    keys = [(len(h.elements), h.elements) for h in subs]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_full_cosets_within_golden():
    H = generate_subgroup(Z12, cyc(2))
    assert full_cosets_within(Z12, GOLDEN_A, H) == tuple(cyc(0, 2, 4, 6, 8, 10))


def test_full_cosets_within_edges():
    H = generate_subgroup(Z12, cyc(3))
    assert full_cosets_within(Z12, H.elements, H) == H.elements
    assert full_cosets_within(Z12, cyc(0, 3, 6), H) == ()


def test_full_cosets_within_stability():
    H = generate_subgroup(Z12, cyc(4))
    kept = full_cosets_within(Z12, GOLDEN_A, H)
    kept_set = set(kept)
    for a in kept:
        for h in H.elements:
            assert compose(Z12, a, h) in kept_set


def test_subgroup_validate_rejects_non_subgroup():
    assert not Subgroup(Z12, ((0,), (1,))).validate()
    assert not Subgroup(Z12, ((1,),)).validate()


def test_group_literals_round_trip():
    for literal in ("Z12", "Z2xZ4", "Z2xZ", "Z1", "Z", "Z3xZ3xZ"):
        assert format_group(parse_group(literal)) == literal
    assert parse_group("Z2xZ") == Z2xZ
    assert parse_group("Z1") == TRIVIAL


def test_group_literal_errors():
    for bad in ("", "Q8", "Z0", "Z-2", "ZxZ2", "Z2x", "z12"):
        with pytest.raises(InvalidElementError):
            parse_group(bad)
