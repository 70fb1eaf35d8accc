"""Maximum matchings, deficiency routes, and the defect-bound corollaries."""

import random

import pytest

from deltoids import (
    InvalidDefectError,
    PartialMatching,
    ResourceLimitError,
    build_deltoid,
    chowla_defect,
    deficiency,
    deficiency_by_subsets,
    max_matching,
    max_progression_length,
    order,
    partial_matching_with_defect,
    verify_matching,
)
from helpers import (
    Z2xZ,
    Z2xZ4,
    Z3,
    Z6,
    Z8,
    Z12,
    brute_deficiency,
    cyc,
    exhaustive_instances,
    golden_deltoid,
    gset,
    random_instance,
)


def test_max_matching_golden():
    D = golden_deltoid()
    m = max_matching(D)
    assert len(m.pairs) == 5
    assert m.defect == 3
    assert verify_matching(D, m)


def test_max_matching_singleton():
    D = build_deltoid(gset(Z3, cyc(1)), gset(Z3, cyc(1)))
    m = max_matching(D)
    assert len(m.pairs) == 1 and m.defect == 0


def test_max_matching_deterministic():
    D1 = golden_deltoid()
    D2 = golden_deltoid()
    assert max_matching(D1) == max_matching(D2)


def test_max_matching_agrees_with_subset_oracle_on_random_z8():
    rng = random.Random(88)
    for _ in range(150):
        D = random_instance(rng, Z8, max_size=6)
        assert deficiency(D) == deficiency_by_subsets(D)


def test_deficiency_golden():
    assert deficiency(golden_deltoid()) == 3


def test_self_pair_matchable_when_identity_absent():
    rng = random.Random(36)
    for _ in range(60):
        D = random_instance(rng, Z12, max_size=8, identity_in_a=False)
        self_pair = build_deltoid(D.A, D.A)
        assert deficiency(self_pair) == 0


def test_partial_matching_with_defect_golden():
    D = golden_deltoid()
    got = partial_matching_with_defect(D, 3)
    assert got is not None and got.defect == 3
    assert verify_matching(D, got)
    assert partial_matching_with_defect(D, 2) is None
    empty = partial_matching_with_defect(D, 8)
    assert empty is not None and empty.pairs == () and empty.defect == 8
    assert verify_matching(D, empty)


def test_partial_matching_defect_out_of_range():
    D = golden_deltoid()
    with pytest.raises(InvalidDefectError):
        partial_matching_with_defect(D, 9)
    with pytest.raises(InvalidDefectError):
        partial_matching_with_defect(D, -1)


def test_defect_monotone_over_small_instances():
    for D in exhaustive_instances(Z6, sizes=(1, 2)):
        delta = deficiency(D)
        for d in range(D.size + 1):
            got = partial_matching_with_defect(D, d)
            assert (got is not None) == (d >= delta)
            if got is not None:
                assert got.defect == d
                assert verify_matching(D, got)


def test_deficiency_by_subsets_examples():
    assert deficiency_by_subsets(golden_deltoid()) == 3
    assert deficiency_by_subsets(build_deltoid(gset(Z3, cyc(1)), gset(Z3, cyc(1)))) == 0


def test_deficiency_by_subsets_bound():
    with pytest.raises(ResourceLimitError):
        deficiency_by_subsets(golden_deltoid(), subset_bound=7)


def test_oracle_agreement_exhaustive_and_brute():
    for D in exhaustive_instances(Z6, sizes=(1, 2, 3)):
        expected = brute_deficiency(D)
        assert deficiency(D) == expected
        assert deficiency_by_subsets(D) == expected


def test_oracle_agreement_random_groups():
    for seed, group in ((7, Z12), (8, Z2xZ4), (9, Z2xZ)):
        rng = random.Random(seed)
        for _ in range(150):
            D = random_instance(rng, group, max_size=7)
            assert deficiency(D) == deficiency_by_subsets(D)


def test_verify_matching_rejects_tampering():
    D = golden_deltoid()
    m = max_matching(D)
    # rerouting 0 to 4 lands back inside A since 0 + 4 = 4
    bad_pairs = tuple(((0,), (4,)) if a == (0,) else (a, b) for a, b in m.pairs)
    assert not verify_matching(D, PartialMatching(bad_pairs, m.defect))
    dup_domain = (m.pairs[0], (m.pairs[0][0], m.pairs[1][1])) + m.pairs[2:]
    assert not verify_matching(D, PartialMatching(dup_domain, m.defect))
    dup_range = (m.pairs[0], (m.pairs[1][0], m.pairs[0][1])) + m.pairs[2:]
    assert not verify_matching(D, PartialMatching(dup_range, m.defect))
    assert not verify_matching(D, PartialMatching(m.pairs, m.defect + 1))
    assert not verify_matching(D, PartialMatching((((3,), (1,)),), 7))
    assert not verify_matching(D, PartialMatching((((0,), (5,)),), 7))
    assert verify_matching(D, PartialMatching((), 8))


def test_intersection_defect_bound():
    # with the identity outside both sets, |A| - |A n B| matchings suffice
    rng = random.Random(41)
    for _ in range(200):
        D = random_instance(rng, Z12, max_size=8, identity_in_a=False)
        bound = D.size - len(D.A.intersection(D.B).elements)
        assert deficiency(D) <= bound


def test_progression_order_defect_bound():
    # no progression longer than n with ratio in B, few low-order elements:
    # the deficiency stays within the count of low-order elements of B
    rng = random.Random(42)
    for group in (Z12, Z2xZ4, Z2xZ):
        for _ in range(120):
            D = random_instance(rng, group, max_size=6)
            n = max(max_progression_length(D.A, x) for x in D.B.elements)
            d = sum(1 for x in D.B.elements if order(group, x) <= n)
            assert deficiency(D) <= d


def test_chowla_defect_bound():
    rng = random.Random(43)
    for group in (Z12, Z2xZ4, Z2xZ):
        for _ in range(120):
            D = random_instance(rng, group, max_size=6)
            bound = chowla_defect(D.B)
            assert bound <= len(D.B.elements)
            assert deficiency(D) <= bound
