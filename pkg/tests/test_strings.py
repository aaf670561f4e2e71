import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kernmedian.domains.strings import (
    EditScript,
    edit_script,
    levenshtein,
    string_weighted_mean,
)

from conftest import levenshtein_recursive

words = st.text(alphabet="abc", max_size=8)


class TestLevenshtein:
    def test_worked_pair(self):
        assert levenshtein("AAAA", "BBB") == 4

    def test_zero_on_identical(self):
        assert levenshtein("same", "same") == 0

    def test_kitten_sitting(self):
        assert levenshtein("kitten", "sitting") == 3

    @given(words, words)
    def test_matches_recursive_definition(self, s, t):
        assert levenshtein(s, t) == levenshtein_recursive(s, t)

    @given(words, words, words)
    @settings(max_examples=60)
    def test_metric_properties(self, a, b, c):
        assert levenshtein(a, b) == levenshtein(b, a)
        assert levenshtein(a, a) == 0
        assert levenshtein(a, c) <= levenshtein(a, b) + levenshtein(b, c)


class TestEditScript:
    def test_length_equals_distance(self):
        script = edit_script("kitten", "sitting")
        assert len(script.operations) == 3
        assert script.intermediates[-1] == "sitting"

    def test_worked_canonical_path(self):
        script = edit_script("AAAA", "BBB")
        assert script.intermediates == ("BAAA", "BBAA", "BBBA", "BBB")

    @given(words, words)
    @settings(max_examples=60)
    def test_intermediates_walk_a_geodesic(self, s, t):
        script = edit_script(s, t)
        assert len(script.operations) == levenshtein(s, t)
        previous = s
        for step, intermediate in enumerate(script.intermediates, start=1):
            assert levenshtein(previous, intermediate) == 1
            assert levenshtein(s, intermediate) == step
            previous = intermediate


class TestStringWeightedMean:
    def test_worked_example(self):
        m = string_weighted_mean("AAAA", "BBB", 15 / 29)
        assert m == "BBAA"
        assert levenshtein("AAAA", m) == 2
        assert levenshtein(m, "BBB") == 2

    def test_endpoints(self):
        assert string_weighted_mean("abc", "xyz", 0.0) == "abc"
        assert string_weighted_mean("abc", "xyz", 1.0) == "xyz"

    def test_alpha_range_enforced(self):
        with pytest.raises(ValueError):
            string_weighted_mean("a", "b", 1.5)

    @given(words, words, st.floats(0.0, 1.0, allow_nan=False))
    @settings(max_examples=80)
    def test_weighted_mean_contract(self, a, b, alpha):
        m = string_weighted_mean(a, b, alpha)
        d = levenshtein(a, b)
        assert levenshtein(a, m) + levenshtein(m, b) == d
        assert abs(levenshtein(a, m) - alpha * d) <= 0.5
