"""The eight kernel functions and Gram-matrix construction.

Five distance-substitution kernels (lin, nd, pol, rbf, comb) work in any
domain through a normalized distance; three positive definite kernels are
domain specific (ssk for strings, partition for clusterings, kendall for
strict permutations).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np

from . import _hot
from .core import (
    ConfigurationError,
    Distance,
    GramMatrix,
    KernelSpec,
    ObjectSet,
    cached_distance,
    sod,
)

DSK_VARIANTS = ("lin", "nd", "pol", "rbf", "comb")


@dataclass(frozen=True)
class OriginSet:
    """Reference objects anchoring the induced scalar product of lin/comb."""

    members: tuple

    def __post_init__(self):
        if not self.members:
            raise ConfigurationError("origin set must be non-empty")

    def __len__(self) -> int:
        return len(self.members)


def _induced_product(a, b, origin, distance: Distance) -> float:
    dao = distance(a, origin)
    dbo = distance(b, origin)
    dab = distance(a, b)
    return 0.5 * (dao * dao + dbo * dbo - dab * dab)


def dsk_eval(variant: str, params: KernelSpec, a, b, distance: Distance,
             origins: OriginSet | None = None) -> float:
    """Evaluate one distance-substitution kernel on a pair of objects."""
    if variant == "nd":
        return -float(distance(a, b)) ** params.beta
    if variant == "rbf":
        d = float(distance(a, b))
        return float(np.exp(-params.gamma * d * d))
    if origins is None or len(origins) == 0:
        raise ConfigurationError(f"kernel {variant!r} needs at least one origin object")
    if variant == "lin":
        return _induced_product(a, b, origins.members[0], distance)
    if variant == "pol":
        prod = _induced_product(a, b, origins.members[0], distance)
        return (1.0 + params.gamma * prod) ** params.degree
    if variant == "comb":
        return float(sum(_induced_product(a, b, o, distance) for o in origins.members))
    raise ConfigurationError(f"unknown distance-substitution kernel {variant!r}")


def ssk_eval(s1: str, s2: str, u_len: int = 2, decay: float = 0.5) -> float:
    """Fixed-length subsequence kernel between two strings.

    Sums, over every subsequence of length ``u_len`` shared by both strings,
    the product of decay**span weights of its occurrences. Strings shorter
    than ``u_len`` contribute nothing.
    """
    if u_len < 1:
        raise ConfigurationError("subsequence length must be >= 1")
    if not 0.0 < decay <= 1.0:
        raise ConfigurationError("decay must lie in (0, 1]")
    return float(_hot.subsequence_kernel(s1, s2, u_len, decay))


def partition_kernel(c1: Sequence[int], c2: Sequence[int]) -> float:
    """Number of index pairs co-clustered in both label vectors."""
    a = np.asarray(c1)
    b = np.asarray(c2)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("label vectors must have equal length")
    # positions sharing both labels form one contingency cell; all pairs
    # inside a cell are co-clustered in both clusterings
    _, inv_a = np.unique(a, return_inverse=True)
    _, inv_b = np.unique(b, return_inverse=True)
    cell = inv_a * (inv_b.max() + 1) + inv_b
    counts = np.bincount(cell)
    return float((counts * (counts - 1) // 2).sum())


def _strict_items(r) -> list:
    """Items of a strict total order in rank order, rejecting ties."""
    buckets = getattr(r, "buckets", None)
    if buckets is not None:
        if any(len(b) > 1 for b in buckets):
            raise ConfigurationError("kendall kernel is defined on tie-free rankings")
        items = [b[0] for b in buckets]
    else:
        items = list(r)
    if len(set(items)) != len(items):
        raise ValueError("permutation contains duplicate items")
    return items


def kendall_kernel(r1, r2) -> float:
    """(concordant - discordant) / total pairs between two permutations."""
    items1 = _strict_items(r1)
    items2 = _strict_items(r2)
    universe = sorted(items1)
    if universe != sorted(items2):
        raise ValueError("permutations must rank the same item set")
    pos1 = {item: pos for pos, item in enumerate(items1)}
    pos2 = {item: pos for pos, item in enumerate(items2)}
    p1 = np.array([pos1[item] for item in universe], dtype=np.int64)
    p2 = np.array([pos2[item] for item in universe], dtype=np.int64)
    m = p1.shape[0]
    pairs = m * (m - 1) // 2
    if pairs == 0:
        return 1.0
    discordant = _hot.ranking_disagreements(p1, p2)
    return float((pairs - 2.0 * discordant) / pairs)


def select_origins(objset: ObjectSet, k: int, distance: Distance, seed: int = 0,
                   distances: np.ndarray | None = None) -> OriginSet:
    """Pick k reference objects by seeded k-medians under the given distance.

    Each returned member minimizes the sum of distances within its cluster;
    the result is deterministic for a fixed seed.
    """
    n = objset.n
    if not 1 <= k <= n:
        raise ValueError(f"origin count {k} out of range for {n} objects")
    if k == n:
        return OriginSet(tuple(objset.objects))
    if distances is None:
        distances = pairwise_distances(objset, distance)
    rng = np.random.default_rng(seed)
    centers = sorted(int(i) for i in rng.choice(n, size=k, replace=False))
    for _ in range(100):
        assign = np.argmin(distances[:, centers], axis=1)
        new_centers = []
        for c, center in enumerate(centers):
            members = np.flatnonzero(assign == c)
            if members.size == 0:
                new_centers.append(center)
                continue
            intra = distances[np.ix_(members, members)].sum(axis=1)
            new_centers.append(int(members[int(np.argmin(intra))]))
        new_centers = sorted(new_centers)
        if new_centers == centers:
            break
        centers = new_centers
    return OriginSet(tuple(objset[i] for i in centers))


def pairwise_distances(objset: ObjectSet, distance: Distance) -> np.ndarray:
    """Full symmetric distance matrix; each pair evaluated once and mirrored."""
    n = objset.n
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            try:
                d = distance(objset[i], objset[j])
            except Exception as exc:
                raise RuntimeError(f"distance evaluation failed for pair ({i}, {j})") from exc
            out[i, j] = d
            out[j, i] = d
    return out


def _resolve_origins(objset: ObjectSet, spec: KernelSpec, distance: Distance,
                     distances: np.ndarray | None, seed: int) -> OriginSet | None:
    if spec.variant not in ("lin", "pol", "comb"):
        return None
    if spec.origins is not None:
        return OriginSet(tuple(spec.origins))
    if spec.variant == "comb":
        return select_origins(objset, min(spec.origin_count, objset.n), distance,
                              seed=seed, distances=distances)
    # lin and pol anchor at the set median
    return select_origins(objset, 1, distance, seed=seed, distances=distances)


def gram_matrix(objset: ObjectSet, spec: KernelSpec, distance: Distance,
                distances: np.ndarray | None = None, seed: int = 0) -> GramMatrix:
    """n x n kernel matrix over the set, with an evaluator for appended objects."""
    dist = cached_distance(distance)
    n = objset.n

    if spec.variant in DSK_VARIANTS:
        if distances is None:
            distances = pairwise_distances(objset, dist)
        origins = _resolve_origins(objset, spec, dist, distances, seed)
        values = _dsk_matrix(objset, spec, dist, distances, origins)

        def evaluator(a, b) -> float:
            return dsk_eval(spec.variant, spec, a, b, dist, origins)

        return GramMatrix(values, objset.objects, evaluator)

    if spec.variant == "ssk":
        pair = lambda a, b: ssk_eval(a, b, spec.subseq_len, spec.decay)
    elif spec.variant == "partition":
        pair = partition_kernel
    elif spec.variant == "kendall":
        pair = kendall_kernel
    else:
        raise ConfigurationError(f"unknown kernel variant {spec.variant!r}")

    values = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            try:
                v = pair(objset[i], objset[j])
            except ValueError:
                raise
            except Exception as exc:
                raise RuntimeError(f"kernel evaluation failed for pair ({i}, {j})") from exc
            values[i, j] = v
            values[j, i] = v
    return GramMatrix(values, objset.objects, pair)


def _dsk_matrix(objset: ObjectSet, spec: KernelSpec, dist: Distance,
                distances: np.ndarray, origins: OriginSet | None) -> np.ndarray:
    d2 = distances * distances
    if spec.variant == "nd":
        return -distances ** spec.beta
    if spec.variant == "rbf":
        return np.exp(-spec.gamma * d2)
    # lin and pol anchor at a single origin, comb sums over all of them
    members = origins.members if spec.variant == "comb" else origins.members[:1]
    prod = np.zeros_like(distances)
    for origin in members:
        to_origin = np.array([dist(o, origin) for o in objset.objects])
        t2 = to_origin * to_origin
        prod += 0.5 * (t2[:, None] + t2[None, :] - d2)
    if spec.variant == "pol":
        return (1.0 + spec.gamma * prod) ** spec.degree
    return prod
