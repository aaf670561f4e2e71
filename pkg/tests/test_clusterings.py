import itertools

import numpy as np
import pytest

from kernmedian.domains.clusterings import (
    clustering_weighted_mean,
    partition_distance,
)


def partition_distance_bruteforce(c1, c2) -> int:
    """Minimum mismatches over all injections of c1's labels into a label pool."""
    labels1 = sorted(set(c1))
    pool = sorted(set(c2)) + [max(set(c2)) + 1 + i for i in range(len(labels1))]
    best = len(c1)
    for target in itertools.permutations(pool, len(labels1)):
        mapping = dict(zip(labels1, target))
        mismatches = sum(1 for a, b in zip(c1, c2) if mapping[a] != b)
        best = min(best, mismatches)
    return best


class TestPartitionDistance:
    def test_relabeling_is_free(self):
        c = (0, 1, 1, 2, 0, 2)
        relabeled = tuple({0: 5, 1: 9, 2: 7}[x] for x in c)
        assert partition_distance(c, relabeled) == 0

    def test_single_swap(self):
        assert partition_distance((1, 1, 2), (1, 2, 2)) == 1

    def test_crossing_partitions(self):
        assert partition_distance((1, 1, 2, 2), (1, 2, 1, 2)) == 2

    def test_matches_bruteforce(self):
        rng = np.random.default_rng(17)
        for _ in range(40):
            m = int(rng.integers(2, 8))
            c1 = tuple(int(x) for x in rng.integers(0, 3, size=m))
            c2 = tuple(int(x) for x in rng.integers(0, 3, size=m))
            assert partition_distance(c1, c2) == partition_distance_bruteforce(c1, c2)

    def test_bounds_and_identity(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            m = int(rng.integers(2, 12))
            c1 = tuple(int(x) for x in rng.integers(0, 4, size=m))
            c2 = tuple(int(x) for x in rng.integers(0, 4, size=m))
            d = partition_distance(c1, c2)
            assert 0 <= d <= m
            if d == 0:
                groups1 = {}
                groups2 = {}
                for i, (a, b) in enumerate(zip(c1, c2)):
                    groups1.setdefault(a, set()).add(i)
                    groups2.setdefault(b, set()).add(i)
                assert sorted(map(sorted, groups1.values())) == sorted(
                    map(sorted, groups2.values()))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            partition_distance((1, 2), (1, 2, 3))


class TestClusteringWeightedMean:
    def test_alpha_zero_is_first_partition(self):
        c1 = (0, 0, 1, 2)
        c2 = (1, 1, 1, 0)
        m = clustering_weighted_mean(c1, c2, 0.0)
        assert partition_distance(m, c1) == 0

    def test_alpha_one_is_second_partition(self):
        c1 = (0, 0, 1, 2)
        c2 = (1, 1, 1, 0)
        m = clustering_weighted_mean(c1, c2, 1.0)
        assert partition_distance(m, c2) == 0

    def test_half_way_on_crossing_partitions(self):
        c1 = (1, 1, 2, 2)
        c2 = (1, 2, 1, 2)
        m = clustering_weighted_mean(c1, c2, 0.5)
        assert partition_distance(c1, m) == 1
        assert partition_distance(m, c2) == 1

    def test_exact_residual(self):
        rng = np.random.default_rng(29)
        for _ in range(40):
            m_len = int(rng.integers(3, 15))
            c1 = tuple(int(x) for x in rng.integers(0, 4, size=m_len))
            c2 = tuple(int(x) for x in rng.integers(0, 4, size=m_len))
            d = partition_distance(c1, c2)
            for alpha in (0.25, 0.5, 0.75):
                mid = clustering_weighted_mean(c1, c2, alpha)
                k = int(np.floor(alpha * d + 0.5))
                assert partition_distance(c1, mid) == k
                assert partition_distance(mid, c2) == d - k

    def test_alpha_range_enforced(self):
        with pytest.raises(ValueError):
            clustering_weighted_mean((1, 2), (1, 2), -0.1)
