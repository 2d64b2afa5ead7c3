import pytest

from cyclecomm.errors import DegreeTooLarge
from cyclecomm.oracle import (
    certify_solver,
    enumerate_even_types,
    exhaustive_pairs,
    find_pi,
    format_report,
    parse_report,
    partitions,
    reachable_types,
)
from cyclecomm.perm import CycleType, commutator, cycle_type, shift


def T(*parts):
    return CycleType(parts)


def test_partitions_count():
    assert [len(list(partitions(n))) for n in range(1, 9)] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_even_types_small():
    assert enumerate_even_types(4) == {T(1, 1, 1, 1), T(3, 1), T(2, 2)}
    assert enumerate_even_types(2) == {T(1, 1)}
    six = enumerate_even_types(6)
    assert {T(3, 3), T(2, 2, 1, 1), T(4, 2), T(5, 1), T(3, 1, 1, 1), T(1, 1, 1, 1, 1, 1)} <= six
    assert not {T(6), T(4, 1, 1), T(2, 1, 1, 1, 1), T(3, 2, 1), T(2, 2, 2)} & six


@pytest.mark.parametrize("n,missing", [(3, {T(3)}), (4, {T(2, 2)}), (5, {T(2, 2, 1)}), (6, set()), (8, set())])
def test_missing_classes(n, missing):
    assert reachable_types(n).missing == missing


def test_image_at_three_is_identity():
    assert reachable_types(3).reachable == {T(1, 1, 1)}


def test_counts_are_consistent():
    r = reachable_types(7)
    assert sum(r.witness_counts.values()) == 720
    assert all((r.witness_counts.get(c, 0) >= 1) == (c in r.reachable) for c in r.all_even)


def test_parallel_matches_serial():
    a = reachable_types(8, workers=1)
    b = reachable_types(8, workers=3)
    assert format_report(a) == format_report(b)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_pairs_match_fixed_shift(n):
    assert exhaustive_pairs(n) == reachable_types(n).reachable


def test_guards():
    with pytest.raises(DegreeTooLarge):
        reachable_types(13)
    with pytest.raises(DegreeTooLarge):
        exhaustive_pairs(8)


def test_report_format_and_parse():
    text = format_report(reachable_types(4))
    assert text == "n=4\n1,1,1,1 reachable 2\n2,2 missing 0\n3,1 reachable 4\n"
    assert format_report(parse_report(text)) == text


def test_find_pi():
    pi = find_pi(6, T(3, 3))
    assert cycle_type(commutator(shift(6), pi)) == T(3, 3)
    assert find_pi(4, T(2, 2)) is None


@pytest.mark.parametrize("n", [6, 7, 9])
def test_certify_solver(n):
    failures = []
    assert certify_solver(n, failures) and failures == []
