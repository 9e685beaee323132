import pytest

from rsinv.enumeration import (
    brute_count_general,
    comp_count,
    compositions,
    count_A,
    count_involutions,
    count_layered,
    generalized_layered,
    involutions,
    layered_from_composition,
    layered_permutations,
    layered_tableaux,
    partition_count,
    partitions,
    standard_tableaux,
    verify_bounds,
)
from rsinv.errors import InstanceTooLarge
from rsinv.permutations import is_involution, is_layered
from rsinv.tableaux import is_layered_tableau, validate
from rsinv.verify import (
    check_composition_total,
    check_exponential_bounds,
    check_family_counts,
    check_general_equivalence,
    check_pairs_distinct,
    check_partition_recurrence,
    check_shape_jog_multisets,
)


def test_partitions_order_and_counts():
    assert list(partitions(3)) == [(3,), (2, 1), (1, 1, 1)]
    assert list(partitions(0)) == [()]
    assert len(list(partitions(5))) == 7
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partition_count_matches_stream():
    result = check_partition_recurrence(12)
    assert result.ok, result.failures
    assert partition_count(0) == 1
    assert partition_count(1) == 1
    assert partition_count(5) == 7
    assert partition_count(12) == 77


def test_compositions():
    assert list(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert list(compositions(0)) == [()]
    for n in range(1, 9):
        assert len(list(compositions(n))) == 2 ** (n - 1)


def test_comp_count():
    assert comp_count((3, 2, 1)) == 6
    assert comp_count((2, 2, 1, 1, 1)) == 10
    assert comp_count((7,)) == 1
    assert comp_count(()) == 1


def test_count_A():
    assert count_A(1) == 1
    assert count_A(3) == 6
    assert count_A(4) == 16


def test_count_A_against_scan():
    for n in range(1, 7):
        assert count_A(n) == brute_count_general(n)


def test_brute_count_examples():
    assert brute_count_general(1) == 1
    assert brute_count_general(3) == 6
    assert brute_count_general(4) == 16


def test_brute_count_cap():
    with pytest.raises(InstanceTooLarge):
        brute_count_general(9)


def test_layered_permutations():
    assert list(layered_permutations(3)) == [
        (1, 2, 3),
        (1, 3, 2),
        (2, 1, 3),
        (3, 2, 1),
    ]
    assert list(layered_permutations(1)) == [(1,)]
    assert sum(1 for _ in layered_permutations(10)) == 512
    assert layered_from_composition((2, 3)) == (2, 1, 5, 4, 3)


def test_involutions_stream():
    assert list(involutions(3)) == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 2, 1)]
    assert list(involutions(1)) == [(1,)]
    assert list(involutions(0)) == [()]
    four = list(involutions(4))
    assert len(four) == 10
    assert four == sorted(four)  # documented lexicographic order
    assert all(is_involution(p) for p in four)
    assert count_involutions(8) == 764
    assert count_involutions(10) == 9496


def test_layered_tableaux_stream():
    assert list(layered_tableaux(2)) == [((1, 2),), ((1,), (2,))]
    assert len(list(layered_tableaux(3))) == 4
    assert list(layered_tableaux(0)) == [()]
    for t in layered_tableaux(6):
        assert validate(t) and is_layered_tableau(t)


def test_standard_tableaux_counts():
    # tableau counts coincide with involution counts (the correspondence
    # restricts to a bijection between the two families)
    for n in range(9):
        assert sum(1 for _ in standard_tableaux(n)) == count_involutions(n)


def test_generalized_layered():
    assert list(generalized_layered(2)) == [(1, 2), (2, 1)]
    three = list(generalized_layered(3))
    assert len(three) == count_A(3) == 6
    result = check_pairs_distinct(7)
    assert result.ok, result.failures


def test_family_counts_check():
    result = check_family_counts(10)
    assert result.ok, result.failures


def test_count_layered():
    assert count_layered(1) == 1
    assert count_layered(10) == 512


def test_two_sided_characterization():
    result = check_general_equivalence(7)
    assert result.ok, result.failures


def test_shape_jog_multisets():
    # when p and its inverse are both GFK-tight, jog lengths of either
    # match the row lengths of the common shape as multisets
    result = check_shape_jog_multisets(7)
    assert result.ok, result.failures


def test_composition_total_is_power_of_two():
    result = check_composition_total(12)
    assert result.ok, result.failures


def test_verify_bounds():
    assert verify_bounds(1)
    assert verify_bounds(4)
    assert partition_count(4) * count_A(4) == 5 * 16
    assert verify_bounds(12)
    result = check_exponential_bounds(12)
    assert result.ok, result.failures
