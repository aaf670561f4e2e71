"""Clustering space: partition distance and label-change weighted mean.

Clusterings are label vectors (tuples of nonnegative ints); the actual
label values never matter, only the partition they induce.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..core import DomainAdapter


def _as_labels(c) -> np.ndarray:
    arr = np.asarray(c, dtype=np.int64)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("a clustering is a non-empty 1-D label vector")
    return arr


def _contingency(a: np.ndarray, b: np.ndarray):
    ua, inv_a = np.unique(a, return_inverse=True)
    ub, inv_b = np.unique(b, return_inverse=True)
    table = np.zeros((ua.size, ub.size), dtype=np.int64)
    np.add.at(table, (inv_a, inv_b), 1)
    return ua, ub, table


def _best_matching(a: np.ndarray, b: np.ndarray):
    """Maximum-agreement assignment between the cluster labels of a and b."""
    ua, ub, table = _contingency(a, b)
    rows, cols = linear_sum_assignment(table, maximize=True)
    agreement = int(table[rows, cols].sum())
    mapping = {int(ua[r]): int(ub[c]) for r, c in zip(rows, cols)}
    return mapping, agreement


def partition_distance(c1, c2) -> int:
    """Objects that must change cluster to make the partitions identical."""
    a = _as_labels(c1)
    b = _as_labels(c2)
    if a.size != b.size:
        raise ValueError("label vectors must have equal length")
    _, agreement = _best_matching(a, b)
    return int(a.size - agreement)


def clustering_weighted_mean(c1, c2, alpha: float) -> tuple:
    """Label vector at ratio alpha between two clusterings.

    After matching c1's clusters to c2's, exactly round(alpha * distance)
    disagreeing positions, lowest indices first, take c2's label.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    a = _as_labels(c1)
    b = _as_labels(c2)
    if a.size != b.size:
        raise ValueError("label vectors must have equal length")
    mapping, _ = _best_matching(a, b)
    fresh = int(b.max()) + 1
    result = []
    for label in a:
        mapped = mapping.get(int(label))
        if mapped is None:
            mapped = fresh + int(label)  # unmatched cluster keeps its own identity
        result.append(mapped)
    disagree = [i for i in range(a.size) if result[i] != int(b[i])]
    k = int(math.floor(alpha * len(disagree) + 0.5))
    for i in disagree[:k]:
        result[i] = int(b[i])
    return tuple(result)


ADAPTER = DomainAdapter("clustering", partition_distance, clustering_weighted_mean)
