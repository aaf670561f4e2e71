"""Equivalence of the compiled extension and the NumPy fallback."""

import numpy as np
import pytest

from kernmedian import _hot, _pure

speedups = pytest.importorskip("kernmedian._speedups")


def random_word(rng, alphabet="abcde", max_len=60):
    size = int(rng.integers(0, max_len))
    return "".join(alphabet[i] for i in rng.integers(0, len(alphabet), size))


def test_active_backend_selection():
    import os

    forced_pure = os.environ.get("KERNMEDIAN_PURE", "") not in ("", "0")
    assert _hot.BACKEND == ("pure" if forced_pure else "compiled")


def test_levenshtein_agreement():
    rng = np.random.default_rng(0)
    for _ in range(150):
        s, t = random_word(rng), random_word(rng)
        assert speedups.levenshtein(s, t) == _pure.levenshtein(s, t)


def test_levenshtein_table_agreement():
    rng = np.random.default_rng(1)
    for _ in range(40):
        s, t = random_word(rng, max_len=25), random_word(rng, max_len=25)
        assert np.array_equal(speedups.levenshtein_table(s, t),
                              _pure.levenshtein_table(s, t))


def test_subsequence_kernel_agreement():
    rng = np.random.default_rng(2)
    for _ in range(60):
        s, t = random_word(rng, "abc", 40), random_word(rng, "abc", 40)
        for length in (1, 2, 3):
            for decay in (0.25, 0.5, 0.9):
                a = speedups.subsequence_kernel(s, t, length, decay)
                b = _pure.subsequence_kernel(s, t, length, decay)
                assert a == pytest.approx(b, rel=1e-9, abs=1e-12)


def test_ranking_disagreements_agreement():
    rng = np.random.default_rng(3)
    for _ in range(120):
        m = int(rng.integers(2, 40))
        p1 = rng.integers(0, 6, size=m).astype(np.int64)
        p2 = rng.integers(0, 6, size=m).astype(np.int64)
        assert speedups.ranking_disagreements(p1, p2) == _pure.ranking_disagreements(p1, p2)


def test_unicode_safe():
    s, t = "naïve café", "naive cafe"
    assert speedups.levenshtein(s, t) == _pure.levenshtein(s, t) == 2
