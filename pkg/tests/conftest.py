import functools
import itertools

import numpy as np
import pytest

from kernmedian import DomainAdapter


def euclidean_distance(a, b) -> float:
    return float(np.linalg.norm(np.subtract(a, b)))


def euclidean_mean(a, b, t):
    return tuple(np.asarray(a, dtype=float) + t * (np.subtract(b, a)))


@pytest.fixture
def euclid_adapter():
    return DomainAdapter("euclid", euclidean_distance, euclidean_mean)


def levenshtein_recursive(s, t) -> int:
    """Plain recursion with memoization, independent of the DP backends."""

    @functools.lru_cache(maxsize=None)
    def rec(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        return min(
            rec(i - 1, j) + 1,
            rec(i, j - 1) + 1,
            rec(i - 1, j - 1) + (s[i - 1] != t[j - 1]),
        )

    return rec(len(s), len(t))


def ssk_bruteforce(s, t, length, decay) -> float:
    """Explicit feature maps over all index tuples; the definitional oracle."""

    def features(x):
        out = {}
        for idx in itertools.combinations(range(len(x)), length):
            u = "".join(x[i] for i in idx)
            span = idx[-1] - idx[0] + 1
            out[u] = out.get(u, 0.0) + decay ** span
        return out

    fs = features(s)
    ft = features(t)
    return sum(v * ft.get(k, 0.0) for k, v in fs.items())


def all_weak_orders(items):
    """Every ordered set partition of the items, as bucket lists."""
    items = list(items)

    def parts(seq):
        if not seq:
            yield []
            return
        first, rest = seq[0], seq[1:]
        for p in parts(rest):
            for i in range(len(p)):
                yield p[:i] + [[first] + p[i]] + p[i + 1:]
            for i in range(len(p) + 1):
                yield p[:i] + [[first]] + p[i:]

    return list(parts(items))
