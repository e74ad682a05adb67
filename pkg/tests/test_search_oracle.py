"""Brute-force oracle tests.

The exhaustive searchers are themselves checked against an even dumber
oracle: literal iteration over all 2^n subsets with the zn_core predicates.
"""

import pytest

from sumfree.errors import BudgetExceededError, DomainError
from sumfree.search_oracle import (
    brute_special,
    characterization_probe,
    exhaustive_max_sum_free,
    exhaustive_scsf,
)
from sumfree.special_sets import enumerate_special
from sumfree.zn_core import (
    CyclicSet,
    canonical_dilation_class,
    classify,
    dilate,
    is_sum_free,
    units,
)


def dumb_scsf(n):
    out = []
    for bits in range(1 << n):
        props = classify(CyclicSet(n, bits))
        if props.symmetric and props.sum_free and props.complete:
            out.append(CyclicSet(n, bits))
    return out


# --- exhaustive catalog ---


def test_catalog_tiny_moduli():
    assert [m.elements() for m in exhaustive_scsf(2).members] == [[1]]
    assert exhaustive_scsf(3).members == ()
    assert [m.elements() for m in exhaustive_scsf(8).members] == [
        [3, 4, 5],
        [1, 4, 7],
        [1, 3, 5, 7],
    ]


def test_catalog_z1_empty():
    assert exhaustive_scsf(1).members == ()


@pytest.mark.parametrize("n", range(1, 15))
def test_catalog_matches_dumb_oracle(n):
    fast = {m.bits for m in exhaustive_scsf(n).members}
    assert fast == {m.bits for m in dumb_scsf(n)}


def test_catalog_members_sorted_and_verified():
    catalog = exhaustive_scsf(20)
    bit_list = [m.bits for m in catalog.members]
    assert bit_list == sorted(bit_list)
    for member in catalog.members:
        props = classify(member)
        assert props.symmetric and props.sum_free and props.complete


def test_catalog_closed_under_dilation():
    catalog = exhaustive_scsf(16)
    bits = {m.bits for m in catalog.members}
    for member in catalog.members:
        for u in units(16):
            assert dilate(member, u).bits in bits


def test_catalog_classes_z8():
    catalog = exhaustive_scsf(8)
    reps = [(c.representative.elements(), c.orbit_size) for c in catalog.classes]
    assert reps == [([3, 4, 5], 2), ([1, 3, 5, 7], 1)]
    assert sum(c.orbit_size for c in catalog.classes) == len(catalog.members)


def test_catalog_size_filter_consistent():
    full = exhaustive_scsf(22)
    for s in {m.size for m in full.members}:
        filtered = exhaustive_scsf(22, size_filter=s)
        assert filtered.size_filter == s
        assert [m.bits for m in filtered.members] == [
            m.bits for m in full.members if m.size == s
        ]


def test_catalog_workers_agree():
    assert exhaustive_scsf(18, workers=3) == exhaustive_scsf(18)


def test_catalog_budget_refusal():
    with pytest.raises(BudgetExceededError) as exc:
        exhaustive_scsf(30, budget=1 << 10)
    assert exc.value.required == 1 << 15


# --- literal special-set re-enumeration ---


@pytest.mark.parametrize("t", range(1, 7))
def test_brute_special_matches_streamed(t):
    assert brute_special(t) == enumerate_special(t)


def test_brute_special_budget():
    with pytest.raises(BudgetExceededError):
        brute_special(9)  # 2^18 candidates over the 2^16 default


# --- maximum sum-free sets ---


def test_max_sum_free_z11():
    catalog = exhaustive_max_sum_free(11)
    assert catalog.max_size == 4
    assert len(catalog.members) == 5
    assert [c.representative.elements() for c in catalog.classes] == [[4, 5, 6, 7]]
    assert catalog.classes[0].orbit_size == 5


def test_max_sum_free_z13():
    catalog = exhaustive_max_sum_free(13)
    assert catalog.max_size == 4
    reps = [c.representative.elements() for c in catalog.classes]
    assert reps == [[5, 6, 7, 8], [4, 6, 7, 9], [6, 7, 8, 9]]
    assert sum(c.orbit_size for c in catalog.classes) == len(catalog.members)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_max_sum_free_matches_dumb_oracle(p):
    all_sum_free = [
        CyclicSet(p, bits)
        for bits in range(1 << p)
        if is_sum_free(CyclicSet(p, bits))
    ]
    best = max(m.size for m in all_sum_free)
    expect = sorted(m.bits for m in all_sum_free if m.size == best)
    catalog = exhaustive_max_sum_free(p)
    assert catalog.max_size == best
    assert [m.bits for m in catalog.members] == expect


def test_max_sum_free_rejects_bad_p():
    with pytest.raises(DomainError):
        exhaustive_max_sum_free(9)
    with pytest.raises(DomainError):
        exhaustive_max_sum_free(2)
    with pytest.raises(BudgetExceededError):
        exhaustive_max_sum_free(47)


# --- characterization probes ---


def test_probe_p31_exact():
    report = characterization_probe(31, 10)
    assert report.t == 1
    assert report.definition_valid and report.theorem_valid
    assert report.special_count == 1
    assert report.catalog_count == report.construction_count == 15
    assert report.matched_count == 15
    assert report.exact_match
    assert report.predicted is None  # no applicable size class


def test_probe_p29_definition_only():
    report = characterization_probe(29, 8)
    assert report.t == 3
    assert report.definition_valid and not report.theorem_valid
    assert report.catalog_count == 21
    assert report.construction_count == 14
    assert report.matched_count == 14
    assert len(report.catalog_only) == 7
    # every construction output lands in the catalog even outside the range
    assert report.construction_only == ()
    assert not report.exact_match
    assert report.predicted is not None
    assert report.predicted.count == 28


def test_probe_p43_prediction_matches():
    report = characterization_probe(43, 12)
    assert report.t == 4
    assert report.catalog_count == report.construction_count == 84
    assert report.exact_match
    assert report.predicted.count == 84
    assert report.predicted.size == 12


def test_probe_no_window():
    # p - 3s + 1 < 0: no offset window exists at this size
    report = characterization_probe(13, 6)
    assert report.t is None
    assert report.construction_count == 0
    assert report.catalog_count == 0


def test_probe_rejects_composite():
    with pytest.raises(DomainError):
        characterization_probe(33, 10)
