from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from equipart.errors import InvalidArgument, UnsupportedInstance
from equipart.oracle import oracle_chi_star
from equipart.qpartition import exists_qpartition
from equipart.threshold import (
    PartSizes,
    StopKind,
    chi_star,
    chi_star_equal,
    compute_h_fast,
    compute_h_scan,
    s_star,
    s_star_all,
)

from conftest import ordered_instances

NO_Q = StopKind.NO_Q_PARTITION
TWO = StopKind.TWO_NONDIVISIBLE


def brute_s_star(n):
    return next(s for s in range(1, n + 2) if n % s)


@pytest.mark.parametrize("n,expected", [(1, 2), (6, 4), (12, 5), (60, 7), (2520, 11)])
def test_s_star(n, expected):
    assert s_star(n) == expected == brute_s_star(n)


def test_s_star_rejects_nonpositive():
    with pytest.raises(InvalidArgument):
        s_star(0)


@pytest.mark.parametrize("parts,expected", [([3, 6], 2), ([6, 12], 4), ([1], 2)])
def test_s_star_all(parts, expected):
    assert s_star_all(parts) == expected


@pytest.mark.parametrize(
    "parts,h,kind,witnesses",
    [
        ([3, 3], 2, TWO, (0, 1)),
        ([5, 6], 3, NO_Q, (0,)),
        ([3, 6], 4, TWO, (0, 1)),
        ([6, 12], 4, NO_Q, (0,)),
        ([1, 1], 2, TWO, (0, 1)),
    ],
)
def test_h_examples(parts, h, kind, witnesses):
    for fn in (compute_h_scan, compute_h_fast):
        got_h, reason = fn(parts)
        assert (got_h, reason.kind, reason.witnesses) == (h, kind, witnesses)


def test_reason_prefers_two_nondivisible():
    # at q=2, part 0 (5) has a 2-partition but 2 divides neither 5 nor 7
    h, reason = compute_h_fast([4, 5, 7])
    assert h == 2 and reason.kind is TWO and reason.witnesses == (1, 2)
    # both conditions at q=2: 1 has no 2-partition, 1 and 3 are odd
    h, reason = compute_h_scan([1, 3])
    assert h == 2 and reason.kind is TWO


@pytest.mark.parametrize(
    "parts,chi,h", [([3, 3], 4, 2), ([1, 2, 3], 4, 2), ([5, 6], 4, 3), ([3, 6], 3, 4)]
)
def test_chi_star_examples(parts, chi, h):
    report = chi_star(parts)
    assert (report.chi_star, report.h) == (chi, h)
    assert oracle_chi_star(parts) == chi


def test_single_part_rejected():
    with pytest.raises(UnsupportedInstance):
        chi_star([5])


def test_report_json_shape():
    doc = chi_star([3, 3]).to_dict()
    assert doc == {
        "parts": [3, 3],
        "s_star": 2,
        "h": 2,
        "reason": {"kind": "TWO_NONDIVISIBLE", "witnesses": [0, 1]},
        "chi_star": 4,
    }


@pytest.mark.parametrize("n,r,expected", [(3, 2, 4), (4, 3, 6), (1, 5, 5), (1, 2, 2)])
def test_chi_star_equal(n, r, expected):
    assert chi_star_equal(n, r) == expected
    assert chi_star([n] * r).chi_star == expected


def test_chi_star_equal_needs_two_parts():
    with pytest.raises(InvalidArgument):
        chi_star_equal(4, 1)


def test_level_below_h_is_clean():
    """Below h every part has a q-partition and at most one is nondivisible."""
    for parts in ordered_instances(4, 12):
        h, reason = compute_h_fast(parts)
        assert s_star_all(parts) <= h <= min(parts) + 1
        for q in range(1, h):
            assert all(exists_qpartition(n, q) for n in parts)
            assert sum(1 for n in parts if n % q) <= 1
        if reason.kind is NO_Q:
            (i,) = reason.witnesses
            assert parts[i] > (h + 1) * (parts[i] // h)
        else:
            i, j = reason.witnesses
            assert i < j and parts[i] % h and parts[j] % h


part_lists = st.lists(st.integers(1, 10**6), min_size=2, max_size=8)


@given(part_lists)
def test_report_invariants(parts):
    report = chi_star(parts)
    assert report.chi_star == sum(-(-n // report.h) for n in parts)
    assert 2 <= report.s_star <= report.h <= min(parts) + 1
    assert sum(a + b for a, b in report.initial_counts) == report.chi_star
    assert compute_h_scan(parts) == compute_h_fast(parts)


@settings(max_examples=50)
@given(st.lists(st.integers(2**63, 2**80), min_size=2, max_size=4))
def test_huge_parts_stay_exact(parts):
    assert compute_h_fast(parts) == compute_h_scan(parts)
    report = chi_star(parts)
    assert report.chi_star == sum(-(-n // report.h) for n in parts)


def test_part_sizes_validation():
    with pytest.raises(InvalidArgument):
        PartSizes(())
    with pytest.raises(InvalidArgument):
        PartSizes((3, 0))
    assert PartSizes((3, 5)).total == 8
