"""The profile-sweep counter, its DFS cross-check, and enumeration."""

import pytest
from hypothesis import given, settings, strategies as st

from sytcount.count import (
    LabelSetMismatch,
    count_syt,
    count_syt_dfs,
    enumerate_syt,
    is_valid_tableau,
)
from sytcount.shapes import (
    CellRegion,
    Partition,
    StrictPartition,
    Tableau,
    build_region,
    ordinary_region,
    partitions_in_box,
    rotate180,
    shifted_region,
    strict_partitions_in_staircase,
)


def involutions(n):
    # i(n) = i(n-1) + (n-1) i(n-2); counts self-inverse permutations
    a, b = 1, 1
    for k in range(2, n + 1):
        a, b = b, b + (k - 1) * a
    return b


KNOWN_COUNTS = [
    ("part:1", 1),
    ("part:2,1", 2),
    ("part:3,2", 5),
    ("part:3,3", 5),
    ("part:3,2,1", 16),
    ("part:4,4,4", 462),
    ("shifted:2,1", 1),
    ("shifted:3,1", 2),
    ("shifted:4,2", 5),
    ("shifted:4,2,1", 7),
    ("stair:4", 12),
    ("stair:4/1", 4),
    ("stair:5/1", 70),
    ("stair:3/2", 1),
    ("rect:3x3/1", 12),
    ("rect:3x3/2,1", 2),
]

# Counts too large for the DFS cross-check; the sweep handles them instantly.
LARGE_COUNTS = [
    ("rect:5x5/2", 17532900),
    ("rect:6x6/2", 24256712752272),
    ("rect:7x7/2", 4357690921810288494432),
]


class TestCounts:
    @pytest.mark.parametrize("descriptor,expected", KNOWN_COUNTS)
    def test_known_values(self, descriptor, expected):
        region = build_region(descriptor)
        assert count_syt(region) == expected
        assert count_syt_dfs(region) == expected

    @pytest.mark.parametrize("descriptor,expected", LARGE_COUNTS)
    def test_large_values(self, descriptor, expected):
        assert count_syt(build_region(descriptor)) == expected

    def test_empty_region(self):
        empty = CellRegion(())
        assert count_syt(empty) == 1
        assert count_syt_dfs(empty) == 1
        assert [t.rows for t in enumerate_syt(empty)] == [()]

    @given(
        st.lists(st.integers(1, 4), max_size=4).map(
            lambda xs: Partition(tuple(sorted(xs, reverse=True)))
        )
    )
    def test_dfs_agrees_ordinary(self, lam):
        region = ordinary_region(lam)
        assert count_syt(region) == count_syt_dfs(region)

    @given(st.data())
    def test_dfs_agrees_shifted(self, data):
        lam = data.draw(st.sampled_from(list(strict_partitions_in_staircase(5))))
        region = shifted_region(lam)
        assert count_syt(region) == count_syt_dfs(region)

    @pytest.mark.parametrize(
        "descriptor",
        ["part:4,3,1", "shifted:5,3,2", "stair:5/2", "rect:3x4/2,1", "rect:2x5/3"],
    )
    def test_rotation_invariance(self, descriptor):
        region = build_region(descriptor)
        assert count_syt(rotate180(region)) == count_syt(region)
        assert count_syt_dfs(rotate180(region)) == count_syt(region)

    @pytest.mark.parametrize("n", range(7))
    def test_sum_over_shapes_counts_involutions(self, n):
        total = sum(
            count_syt(ordinary_region(lam))
            for lam in partitions_in_box(n, n, size=n)
        )
        assert total == involutions(n)

    @pytest.mark.parametrize("n", range(7))
    def test_squared_sum_is_factorial(self, n):
        import math

        total = sum(
            count_syt(ordinary_region(lam)) ** 2
            for lam in partitions_in_box(n, n, size=n)
        )
        assert total == math.factorial(n)


class TestDiagonalPrecedences:
    def test_needed_when_a_row_shrinks_to_its_diagonal_cell(self):
        region = build_region("stair:3/2")  # rows (1,1), (2,3), (3,3)
        assert count_syt(region) == 1
        stripped = CellRegion(region.rows, frozenset(), "general")
        assert count_syt(stripped) == 4

    @given(st.data())
    def test_redundant_on_full_shifted_shapes(self, data):
        # Strict decrease forces every non-final row past its diagonal, so
        # row/column adjacency already implies the diagonal pairs there.
        lam = data.draw(st.sampled_from(list(strict_partitions_in_staircase(5))))
        region = shifted_region(lam)
        stripped = CellRegion(region.rows, frozenset(), "general")
        assert count_syt(stripped) == count_syt(region)


class TestEnumerate:
    FROZEN_STAIR41 = [
        ((1, 2, 3), (4, 5, 6), (7, 8), (9,)),
        ((1, 2, 3), (4, 5, 7), (6, 8), (9,)),
        ((1, 2, 4), (3, 5, 6), (7, 8), (9,)),
        ((1, 2, 4), (3, 5, 7), (6, 8), (9,)),
    ]

    def test_full_listing_in_order(self):
        got = [t.rows for t in enumerate_syt(build_region("stair:4/1"))]
        assert got == self.FROZEN_STAIR41

    def test_limit(self):
        region = build_region("part:3,2")
        assert len(list(enumerate_syt(region, limit=3))) == 3
        assert list(enumerate_syt(region, limit=0)) == []
        assert len(list(enumerate_syt(region, limit=99))) == 5

    @pytest.mark.parametrize(
        "descriptor", ["part:3,3", "shifted:4,2,1", "stair:4/1", "rect:3x3/2,1"]
    )
    def test_enumeration_is_exhaustive_valid_and_distinct(self, descriptor):
        region = build_region(descriptor)
        seen = list(enumerate_syt(region))
        assert len(seen) == count_syt(region)
        assert len(set(t.rows for t in seen)) == len(seen)
        assert all(is_valid_tableau(t) for t in seen)


class TestValidity:
    def test_bad_label_multiset_raises(self):
        region = build_region("part:2,1")
        with pytest.raises(LabelSetMismatch):
            is_valid_tableau(Tableau(region, ((1, 2), (2,))))
        with pytest.raises(LabelSetMismatch):
            is_valid_tableau(Tableau(region, ((1, 2), (4,))))

    def test_order_violations_return_false(self):
        region = build_region("part:2,2")
        assert is_valid_tableau(Tableau(region, ((1, 2), (3, 4))))
        assert not is_valid_tableau(Tableau(region, ((2, 1), (3, 4))))
        assert not is_valid_tableau(Tableau(region, ((1, 4), (2, 3))))

    def test_extra_precedence_checked(self):
        # in stair:3/2 cell (1,1) touches the rest only through its pair
        region = build_region("stair:3/2")
        assert is_valid_tableau(Tableau(region, ((1,), (2, 3), (4,))))
        assert not is_valid_tableau(Tableau(region, ((2,), (1, 3), (4,))))
