"""From converged weights to a median object.

Sorting the final weight magnitudes descending orders objects by closeness
to the implicit median, projection ratios between candidates come straight
from weights and Gram values, and the domain's weighted mean materializes
the result. Best-so-far bookkeeping guarantees the returned object is never
worse than the closest input object.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    CoincidentObjectsError,
    DegenerateWeightsError,
    DomainAdapter,
    GramMatrix,
    KernelSpec,
    MedianResult,
    ObjectSet,
    WeightVector,
    cached_distance,
    kernel_squared_distance,
    sod,
)
from .kernels import gram_matrix
from .weiszfeld import WeiszfeldConfig, kernel_weiszfeld


@dataclass(frozen=True)
class AlphaRatio:
    """Projection ratio for a weighted mean: clamped value plus raw diagnostics."""

    value: float
    raw: complex
    clamped: bool


@dataclass(frozen=True)
class ReconstructionConfig:
    method: str = "lin_rec"
    with_search: bool = False
    both_directions: bool = True

    METHODS = ("linear", "triangular", "lin_rec", "tri_rec")

    def __post_init__(self):
        if self.method not in self.METHODS:
            raise ValueError(f"unknown reconstruction method {self.method!r}")


def projection_alpha(x, a, b) -> float:
    """Ratio of the orthogonal projection of x onto the segment a..b.

    Explicit-vector counterpart of kernel_alpha, used as a test oracle.
    """
    x = np.asarray(x, dtype=np.float64)
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    u = b - a
    den = float(u @ u)
    if den == 0.0:
        raise ValueError("projection onto a zero-length segment")
    return float((x - a) @ u / den)


def kernel_alpha(w: WeightVector, gram: GramMatrix, a: int, b: int) -> AlphaRatio:
    """Projection ratio of the implicit median onto the segment a..b.

    Needs only the final weights and kernel values. A complex raw value
    (possible with indefinite kernels) is reduced to its magnitude; the
    usable value is clamped into [0, 1].
    """
    weights = w.weights
    n = weights.shape[0]
    values = gram.values
    den = kernel_squared_distance(gram, a, b)
    if den == 0.0:
        raise CoincidentObjectsError(f"objects {a} and {b} coincide in kernel space")
    s = weights.sum()
    if abs(s) == 0.0:
        raise DegenerateWeightsError("weights sum to zero")
    num = weights @ (values[:n, b] - values[:n, a]) / s - values[a, b] + values[a, a]
    raw = complex(num) / den
    value = abs(raw) if raw.imag != 0.0 else raw.real
    clamped = value < 0.0 or value > 1.0
    return AlphaRatio(min(1.0, max(0.0, value)), raw, clamped)


def weighted_mean_best(adapter: DomainAdapter, a, b, alpha, objset: ObjectSet,
                       distance, both_directions: bool = True):
    """Weighted mean from a to b, or from b to a, whichever has smaller SOD.

    Ties keep the forward direction.
    """
    t = alpha.value if isinstance(alpha, AlphaRatio) else float(alpha)
    forward = adapter.weighted_mean(a, b, t)
    if not both_directions:
        return forward
    backward = adapter.weighted_mean(b, a, 1.0 - t)
    if sod(objset, backward, distance) < sod(objset, forward, distance):
        return backward
    return forward


def _weight_order(w: WeightVector) -> np.ndarray:
    """Indices by descending weight magnitude, ties broken by lower index."""
    return np.argsort(-np.abs(w.weights), kind="stable")


def _gram_index(gram: GramMatrix, obj, fallback: tuple) -> int:
    for idx, candidate in fallback:
        if obj == candidate:
            return idx
    return gram.append(obj)


def _combine(chain, w, gram, adapter, distance, objset, both_directions, record):
    """Fold a chain of (index, object) pairs with projection-ratio means.

    Implements the sequential reconstruction step: start at the first
    object, repeatedly project the implicit median onto the segment to the
    next object and take the better directed weighted mean.
    """
    cur_idx, cur_obj = chain[0]
    for nxt_idx, nxt_obj in chain[1:]:
        try:
            alpha = kernel_alpha(w, gram, cur_idx, nxt_idx)
        except CoincidentObjectsError:
            continue  # coinciding endpoints: keep the current object
        cand = weighted_mean_best(adapter, cur_obj, nxt_obj, alpha, objset,
                                  distance, both_directions)
        cand_idx = _gram_index(gram, cand, ((cur_idx, cur_obj), (nxt_idx, nxt_obj)))
        cur_idx, cur_obj = cand_idx, cand
        record(cur_obj)
    return cur_idx, cur_obj


def reconstruct_seq(l: int, objset: ObjectSet, w: WeightVector, gram: GramMatrix,
                    adapter: DomainAdapter, distance,
                    both_directions: bool = True) -> MedianResult:
    """Combine the l nearest neighbors of the implicit median (l = 2 or 3).

    Falls back to l = n for smaller sets. Returns the best candidate seen,
    which is never worse than the single nearest neighbor.
    """
    l = min(l, objset.n)
    order = _weight_order(w)
    trace: list = []

    def record(obj):
        trace.append((obj, sod(objset, obj, distance)))

    first = int(order[0])
    record(objset[first])
    chain = [(int(i), objset[int(i)]) for i in order[:l]]
    _combine(chain, w, gram, adapter, distance, objset, both_directions, record)
    return _finish(trace, w, objset)


def reconstruct_recursive(mode: str, objset: ObjectSet, w: WeightVector,
                          gram: GramMatrix, adapter: DomainAdapter, distance,
                          both_directions: bool = True) -> MedianResult:
    """Round-based reconstruction: group by weight, combine, repeat.

    Groups the current objects into pairs (mode "pairs") or triples
    (mode "triples") in descending weight order, combines each group
    sequentially, and continues with the combined objects until one
    remains. Leftover single objects carry over unchanged; a leftover pair
    under triples combines as a pair. The best candidate across all rounds
    is returned.
    """
    if mode not in ("pairs", "triples"):
        raise ValueError(f"unknown grouping mode {mode!r}")
    group = 2 if mode == "pairs" else 3
    order = _weight_order(w)
    trace: list = []

    def record(obj):
        trace.append((obj, sod(objset, obj, distance)))

    first = int(order[0])
    record(objset[first])
    pool = [(int(i), objset[int(i)]) for i in order]
    while len(pool) > 1:
        nxt: list = []
        for start in range(0, len(pool), group):
            chunk = pool[start:start + group]
            if len(chunk) == 1:
                nxt.append(chunk[0])
                continue
            combined = _combine(chunk, w, gram, adapter, distance, objset,
                                both_directions, record)
            nxt.append(combined)
        pool = nxt
    return _finish(trace, w, objset)


def _finish(trace, w, objset) -> MedianResult:
    sods = [s for _, s in trace]
    best = int(np.argmin(sods))
    best_obj, best_sod = trace[best]
    return MedianResult(
        median=best_obj,
        sod=float(best_sod),
        sigma=float(best_sod) / objset.n,
        iterations=w.iteration,
        trace=trace,
    )


SEARCH_GRID = tuple(k / 10.0 for k in range(1, 10))


def linear_search(start, objset: ObjectSet, adapter: DomainAdapter,
                  distance) -> MedianResult:
    """Local refinement along weighted means toward every set member.

    Repeats full passes over the set; for each member, candidates on a
    fixed ratio grid in both directions are scanned and the best strict
    improvement is adopted. Stops after the first pass without improvement,
    so the traced SOD is non-increasing.
    """
    current = start
    current_sod = sod(objset, start, distance)
    trace = [(current, current_sod)]
    improved = True
    while improved:
        improved = False
        for member in objset.objects:
            best_obj = None
            best_sod = current_sod
            for t in SEARCH_GRID:
                for x, y in ((current, member), (member, current)):
                    cand = adapter.weighted_mean(x, y, t)
                    cand_sod = sod(objset, cand, distance)
                    if cand_sod < best_sod:
                        best_obj, best_sod = cand, cand_sod
            if best_obj is not None:
                current, current_sod = best_obj, best_sod
                trace.append((current, current_sod))
                improved = True
    return MedianResult(
        median=current,
        sod=float(current_sod),
        sigma=float(current_sod) / objset.n,
        iterations=0,
        trace=trace,
    )


def compute_median(objset: ObjectSet, kernel: KernelSpec,
                   cfg: WeiszfeldConfig = WeiszfeldConfig(),
                   rcfg: ReconstructionConfig = ReconstructionConfig(),
                   adapter: DomainAdapter | None = None,
                   seed: int = 0) -> MedianResult:
    """Full pipeline: Gram matrix, weight iteration, reconstruction, search."""
    if adapter is None:
        raise ValueError("an adapter with distance and weighted mean is required")
    distance = cached_distance(adapter.distance)
    gram = gram_matrix(objset, kernel, distance, seed=seed)
    w = kernel_weiszfeld(gram, cfg)
    if rcfg.method == "linear":
        result = reconstruct_seq(2, objset, w, gram, adapter, distance,
                                 rcfg.both_directions)
    elif rcfg.method == "triangular":
        result = reconstruct_seq(3, objset, w, gram, adapter, distance,
                                 rcfg.both_directions)
    elif rcfg.method == "lin_rec":
        result = reconstruct_recursive("pairs", objset, w, gram, adapter,
                                       distance, rcfg.both_directions)
    else:
        result = reconstruct_recursive("triples", objset, w, gram, adapter,
                                       distance, rcfg.both_directions)
    if rcfg.with_search:
        refined = linear_search(result.median, objset, adapter, distance)
        result.trace.extend(refined.trace[1:])
        if refined.sod < result.sod:
            result.median = refined.median
            result.sod = refined.sod
            result.sigma = refined.sod / objset.n
    result.complex_weight_count = w.complex_count
    return result
