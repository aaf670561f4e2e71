import numpy as np
import pytest

from kernmedian.domains.rankings import (
    Ranking,
    kendall_tau_gen,
    ranking_weighted_mean,
)

from conftest import all_weak_orders


class TestRankingType:
    def test_parse_buckets(self):
        r = Ranking.parse("a>b=c>d")
        assert r.buckets == (("a",), ("b", "c"), ("d",))

    def test_format_round_trip(self):
        for text in ("a>b=c>d", "x", "a=b"):
            assert Ranking.parse(text).format() == text

    def test_duplicate_items_rejected(self):
        with pytest.raises(ValueError):
            Ranking.parse("a>b>a")

    def test_empty_bucket_rejected(self):
        with pytest.raises(ValueError):
            Ranking([[]])

    def test_canonical_bucket_order(self):
        assert Ranking([["c", "b"], ["a"]]) == Ranking([["b", "c"], ["a"]])


class TestKendallTauGen:
    def test_one_reversed_pair(self):
        assert kendall_tau_gen(Ranking.parse("a>b"), Ranking.parse("b>a")) == 1.0

    def test_half_for_tie_in_one(self):
        assert kendall_tau_gen(Ranking.parse("a>b"), Ranking.parse("a=b")) == 0.5

    def test_full_reversal_of_three(self):
        assert kendall_tau_gen(Ranking.parse("a>b>c"), Ranking.parse("c>b>a")) == 3.0

    def test_item_set_mismatch(self):
        with pytest.raises(ValueError):
            kendall_tau_gen(Ranking.parse("a>b"), Ranking.parse("a>c"))

    def test_metric_properties_exhaustive_three_items(self):
        orders = [Ranking(b) for b in all_weak_orders(["a", "b", "c"])]
        for r1 in orders:
            assert kendall_tau_gen(r1, r1) == 0.0
            for r2 in orders:
                assert kendall_tau_gen(r1, r2) == kendall_tau_gen(r2, r1)
                for r3 in orders:
                    assert kendall_tau_gen(r1, r3) <= (
                        kendall_tau_gen(r1, r2) + kendall_tau_gen(r2, r3) + 1e-12)

    def test_triangle_on_random_five_item_rankings(self):
        rng = np.random.default_rng(31)
        from kernmedian.datagen import gen_rankings
        pool = gen_rankings(77, 30, 5, tie_prob=0.3)
        for _ in range(150):
            r1, r2, r3 = (pool[int(i)] for i in rng.integers(0, len(pool), 3))
            assert kendall_tau_gen(r1, r3) <= (
                kendall_tau_gen(r1, r2) + kendall_tau_gen(r2, r3) + 1e-12)


class TestRankingWeightedMean:
    def test_endpoints(self):
        r1 = Ranking.parse("a>b>c")
        r2 = Ranking.parse("c>b>a")
        assert ranking_weighted_mean(r1, r2, 0.0) == r1
        m = ranking_weighted_mean(r1, r2, 1.0)
        assert kendall_tau_gen(m, r2) == 0.0

    def test_one_third_of_full_reversal(self):
        r1 = Ranking.parse("a>b>c")
        r2 = Ranking.parse("c>b>a")
        m = ranking_weighted_mean(r1, r2, 1 / 3)
        assert 0.5 <= kendall_tau_gen(r1, m) <= 1.5

    def test_exhaustive_three_items(self):
        orders = [Ranking(b) for b in all_weak_orders(["a", "b", "c"])]
        for r1 in orders:
            for r2 in orders:
                assert ranking_weighted_mean(r1, r2, 0.0) == r1
                full = ranking_weighted_mean(r1, r2, 1.0)
                assert kendall_tau_gen(full, r2) == 0.0
                d = kendall_tau_gen(r1, r2)
                for alpha in (0.3, 0.5, 0.8):
                    m = ranking_weighted_mean(r1, r2, alpha)
                    resid = kendall_tau_gen(r1, m) + kendall_tau_gen(m, r2) - d
                    assert resid <= 1.0 + 1e-9

    def test_sampled_four_item_weak_orders(self):
        rng = np.random.default_rng(37)
        orders = [Ranking(b) for b in all_weak_orders(["a", "b", "c", "d"])]
        for _ in range(120):
            r1 = orders[int(rng.integers(len(orders)))]
            r2 = orders[int(rng.integers(len(orders)))]
            full = ranking_weighted_mean(r1, r2, 1.0)
            assert kendall_tau_gen(full, r2) == 0.0
            d = kendall_tau_gen(r1, r2)
            m = ranking_weighted_mean(r1, r2, 0.5)
            resid = kendall_tau_gen(r1, m) + kendall_tau_gen(m, r2) - d
            assert resid <= 1.0 + 1e-9

    def test_alpha_range_enforced(self):
        r = Ranking.parse("a>b")
        with pytest.raises(ValueError):
            ranking_weighted_mean(r, r, 2.0)
