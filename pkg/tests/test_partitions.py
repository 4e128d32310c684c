import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ahat.partitions import Partition, partition_index, partition_splittings, partitions_of


def pentagonal_partition_count(n):
    """Euler's pentagonal-number recurrence, as an independent oracle."""
    counts = [1]
    for m in range(1, n + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            g2 = j * (3 * j + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = -1 if j % 2 == 0 else 1
            if g1 <= m:
                total += sign * counts[m - g1]
            if g2 <= m:
                total += sign * counts[m - g2]
            j += 1
        counts.append(total)
    return counts[n]


def brute_force_partitions(k):
    """All weakly decreasing positive tuples summing to k, by filtering."""
    if k == 0:
        return [()]
    found = set()
    for length in range(1, k + 1):
        for combo in itertools.product(range(1, k + 1), repeat=length):
            if sum(combo) == k and all(combo[i] >= combo[i + 1] for i in range(length - 1)):
                found.add(combo)
    return sorted(found, reverse=True)


partitions_st = st.lists(st.integers(1, 8), max_size=6).map(
    lambda parts: Partition(sorted(parts, reverse=True))
)


class TestPartitionType:
    def test_rejects_nonpositive_parts(self):
        with pytest.raises(ValueError):
            Partition((2, 0))
        with pytest.raises(ValueError):
            Partition((-1,))

    def test_rejects_increasing_parts(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_weight_and_empty(self):
        assert Partition(()).weight == 0
        assert Partition((3, 2, 1)).weight == 6

    def test_hashable_and_str(self):
        assert Partition((2, 1)) == Partition([2, 1])
        assert hash(Partition((2, 1))) == hash(Partition((2, 1)))
        assert str(Partition((2, 1))) == "[2,1]"
        assert str(Partition(())) == "[]"


class TestPartitionsOf:
    def test_weight_zero(self):
        assert partitions_of(0) == (Partition(()),)

    def test_weight_two(self):
        assert partitions_of(2) == (Partition((2,)), Partition((1, 1)))

    def test_weight_six_has_eleven(self):
        assert len(partitions_of(6)) == 11

    @pytest.mark.parametrize("k", range(0, 9))
    def test_matches_brute_force_enumeration(self, k):
        assert [p.parts for p in partitions_of(k)] == brute_force_partitions(k)

    def test_counts_match_pentagonal_recurrence_up_to_20(self):
        for k in range(21):
            assert len(partitions_of(k)) == pentagonal_partition_count(k)

    def test_descending_lex_order(self):
        for k in range(9):
            parts = [p.parts for p in partitions_of(k)]
            assert parts == sorted(parts, reverse=True)
            if k >= 1:
                assert parts[0] == (k,)
                assert parts[-1] == (1,) * k

    def test_memoized_per_weight(self):
        assert partitions_of(7) is partitions_of(7)

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            partitions_of(-1)


class TestPartitionIndex:
    def test_first_two_of_weight_two(self):
        assert partition_index(Partition((2,))) == 0
        assert partition_index(Partition((1, 1))) == 1

    def test_index_within_brute_force_enumeration(self):
        expected = brute_force_partitions(6).index((3, 2, 1))
        assert partition_index(Partition((3, 2, 1))) == expected

    @given(partitions_st)
    def test_inverse_of_indexing(self, p):
        assert partitions_of(p.weight)[partition_index(p)] == p


def brute_force_splittings(p):
    """Distinct ordered complement pairs, via subsets of part positions."""
    parts = p.parts
    seen = set()
    for r in range(len(parts) + 1):
        for positions in itertools.combinations(range(len(parts)), r):
            mu = tuple(sorted((parts[i] for i in positions), reverse=True))
            nu = tuple(sorted((parts[i] for i in range(len(parts)) if i not in positions),
                              reverse=True))
            seen.add((mu, nu))
    return seen


class TestPartitionSplittings:
    def test_single_part(self):
        assert partition_splittings(Partition((1,))) == (
            (Partition((1,)), Partition(())),
            (Partition(()), Partition((1,))),
        )

    def test_repeated_part(self):
        assert partition_splittings(Partition((1, 1))) == (
            (Partition((1, 1)), Partition(())),
            (Partition((1,)), Partition((1,))),
            (Partition(()), Partition((1, 1))),
        )

    def test_two_distinct_parts_give_four_pairs(self):
        assert len(partition_splittings(Partition((2, 1)))) == 4

    @given(partitions_st)
    def test_matches_brute_force_and_count_formula(self, p):
        pairs = partition_splittings(p)
        as_tuples = {(mu.parts, nu.parts) for mu, nu in pairs}
        assert len(pairs) == len(as_tuples)  # no duplicates
        assert as_tuples == brute_force_splittings(p)
        expected_count = 1
        for v in set(p.parts):
            expected_count *= p.parts.count(v) + 1
        assert len(pairs) == expected_count

    @given(partitions_st)
    def test_each_pair_merges_back(self, p):
        for mu, nu in partition_splittings(p):
            assert tuple(sorted(mu.parts + nu.parts, reverse=True)) == p.parts


class TestRationalContract:
    """The scalar field: stdlib Fraction satisfies the required invariants."""

    def test_normalized_form(self):
        x = Fraction(6, -8)
        assert x.denominator > 0
        assert x == Fraction(-3, 4)
        assert Fraction(0, 5) == Fraction(0, 1)

    @given(st.integers(-10**40, 10**40), st.integers(1, 10**40),
           st.integers(-10**40, 10**40), st.integers(1, 10**40))
    def test_addition_round_trips_exactly(self, a, b, c, d):
        x = Fraction(a, b)
        y = Fraction(c, d)
        assert (x + y) - y == x
