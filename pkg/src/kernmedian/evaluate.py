"""Quality and diagnostic measures: lower bound, SOD normalization,
distance-preservation ratios, correlation, scale estimate, convergence stats."""

from __future__ import annotations

import statistics
from dataclasses import dataclass

import numpy as np

from .core import (
    Distance,
    KernelSpec,
    ObjectSet,
    UndefinedCorrelationError,
    UndefinedNormalizationError,
    WeightVector,
    kernel_norm,
)
from .kernels import gram_matrix


@dataclass
class DistortionReport:
    """Per-pair ratios between original and kernel-space distances.

    ``ratios`` holds original/embedded for every pair with positive original
    distance; ``zero_norm_pairs`` counts pairs excluded because the embedded
    distance vanished while the original did not.
    """

    ratios: np.ndarray
    histogram: tuple
    ncc: float
    zero_norm_pairs: int


@dataclass
class ConvergenceReport:
    max_iter: int
    med_iter: int
    complex_weight_count: int
    iterations: list


def lower_bound_pairwise(objset: ObjectSet, distance: Distance) -> float:
    """Sum of pairwise distances over (n - 1): a floor for any candidate's SOD.

    For every candidate o and pair (i, j), d(i, o) + d(j, o) >= d(i, j) by
    the triangle inequality; summing over pairs counts each object n - 1
    times. Returns 0 for sets with fewer than two objects.
    """
    n = objset.n
    if n < 2:
        return 0.0
    total = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            total += distance(objset[i], objset[j])
    return total / (n - 1)


def normalized_sod(sod_value: float, lower_bound: float) -> float:
    """(SOD - LB) / LB: zero at the bound, one when 100% above it."""
    if lower_bound <= 0.0:
        raise UndefinedNormalizationError(
            "normalization needs a positive lower bound; report absolute SOD instead")
    return (sod_value - lower_bound) / lower_bound


def ncc(orig, embedded) -> float:
    """Normalized cross correlation between two distance collections."""
    a = np.asarray(orig, dtype=np.float64)
    b = np.asarray(embedded, dtype=np.float64)
    if a.shape != b.shape or a.size == 0:
        raise ValueError("sequences must be non-empty and of equal length")
    if float(a.std()) == 0.0 or float(b.std()) == 0.0:
        raise UndefinedCorrelationError("correlation undefined for zero variance")
    return float(np.corrcoef(a, b)[0, 1])


def distortion_ratios(objset: ObjectSet, kernel: KernelSpec, distance: Distance,
                      bins: int = 50, seed: int = 0) -> DistortionReport:
    """Measure how well the kernel embedding preserves pairwise distances.

    For each pair with positive original distance the ratio
    original / |embedded| is collected; a perfectly distance-preserving
    kernel yields one constant. The histogram spans [0, max ratio].
    """
    gram = gram_matrix(objset, kernel, distance, seed=seed)
    n = objset.n
    ratios = []
    orig_all = []
    emb_all = []
    zero_norm = 0
    for i in range(n):
        for j in range(i + 1, n):
            d = float(distance(objset[i], objset[j]))
            norm = abs(kernel_norm(gram, i, j))
            orig_all.append(d)
            emb_all.append(norm)
            if d <= 0.0:
                continue
            if norm == 0.0:
                zero_norm += 1
                continue
            ratios.append(d / norm)
    ratios = np.asarray(ratios, dtype=np.float64)
    if ratios.size:
        counts, edges = np.histogram(ratios, bins=bins, range=(0.0, float(ratios.max())))
    else:
        counts, edges = np.histogram(ratios, bins=bins, range=(0.0, 1.0))
    correlation = ncc(orig_all, emb_all)
    return DistortionReport(
        ratios=ratios,
        histogram=(edges, counts),
        ncc=correlation,
        zero_norm_pairs=zero_norm,
    )


def laplace_sigma(objset: ObjectSet, median, distance: Distance) -> float:
    """SOD / n: the maximum-likelihood scale of distance-exponential noise."""
    total = sum(distance(o, median) for o in objset.objects)
    return float(total) / objset.n


def convergence_stats(runs: list[WeightVector]) -> ConvergenceReport:
    """Aggregate iteration counts and complex-weight occurrences over runs."""
    if not runs:
        raise ValueError("at least one run is required")
    iterations = [r.iteration for r in runs]
    return ConvergenceReport(
        max_iter=int(max(iterations)),
        med_iter=int(statistics.median_low(iterations)),
        complex_weight_count=int(sum(r.complex_count for r in runs)),
        iterations=iterations,
    )
