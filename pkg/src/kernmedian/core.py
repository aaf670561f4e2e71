"""Shared types and primitive kernel-space computations.

Everything here is domain-agnostic: objects are opaque values paired with a
distance and a weighted-mean function, and all geometry happens through
kernel values collected in a Gram matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

Distance = Callable[[Any, Any], float]
WeightedMean = Callable[[Any, Any, float], Any]


class ConfigurationError(ValueError):
    """Invalid kernel, domain or parameter combination."""


class DegenerateWeightsError(ValueError):
    """Weiszfeld weights summed to zero; the implicit mean is undefined."""


class CoincidentObjectsError(ValueError):
    """Projection between two objects at kernel distance zero."""


class UndefinedCorrelationError(ValueError):
    """Correlation requested for a zero-variance sequence."""


class UndefinedNormalizationError(ValueError):
    """SOD normalization requested with a non-positive lower bound."""


@dataclass(frozen=True)
class ObjectSet:
    """Ordered input multiset; indices stay stable for a whole computation."""

    objects: tuple

    def __init__(self, objects: Sequence[Any]):
        items = tuple(objects)
        if not items:
            raise ValueError("object set must contain at least one object")
        object.__setattr__(self, "objects", items)

    @property
    def n(self) -> int:
        return len(self.objects)

    def __len__(self) -> int:
        return len(self.objects)

    def __getitem__(self, i: int):
        return self.objects[i]


@dataclass(frozen=True)
class DomainAdapter:
    """An object space: a distance and a weighted-mean interpolation.

    ``distance`` must be symmetric, nonnegative and zero on the diagonal
    (wrap raw functions with :func:`normalize_distance` otherwise).
    ``weighted_mean(a, b, t)`` returns an object at ratio ``t`` of the way
    from ``a`` to ``b``; the endpoints come back at ``t`` = 0 and 1, up to
    zero-distance equivalence.
    """

    name: str
    distance: Distance
    weighted_mean: WeightedMean


@dataclass(frozen=True)
class KernelSpec:
    """Kernel choice plus parameters.

    Variants: ``lin``, ``nd``, ``pol``, ``rbf``, ``comb`` (distance
    substitution family), ``ssk``, ``partition``, ``kendall`` (domain
    specific). ``origins`` fixes the reference objects for lin/comb; left
    unset, lin uses the set median and comb selects ``origin_count``
    references by k-medians.
    """

    variant: str
    beta: float = 2.0
    gamma: float = 1.0
    degree: int = 1
    decay: float = 0.5
    subseq_len: int = 2
    origins: tuple | None = None
    origin_count: int = 3

    VARIANTS = ("lin", "nd", "pol", "rbf", "comb", "ssk", "partition", "kendall")

    def __post_init__(self):
        if self.variant not in self.VARIANTS:
            raise ConfigurationError(f"unknown kernel variant {self.variant!r}")
        if not 0.0 <= self.beta <= 2.0:
            raise ConfigurationError("beta must lie in [0, 2]")
        if self.gamma <= 0.0:
            raise ConfigurationError("gamma must be positive")
        if self.degree < 1 or int(self.degree) != self.degree:
            raise ConfigurationError("degree must be a positive integer")
        if not 0.0 < self.decay <= 1.0:
            raise ConfigurationError("decay must lie in (0, 1]")
        if self.subseq_len < 1:
            raise ConfigurationError("subsequence length must be >= 1")
        if self.origins is not None and len(self.origins) < 1:
            raise ConfigurationError("origins must be non-empty when given")
        if self.origin_count < 1:
            raise ConfigurationError("origin_count must be >= 1")


class GramMatrix:
    """Symmetric matrix of kernel values, extensible by appended objects.

    The first ``base_n`` rows belong to the input set; reconstruction may
    append rows for intermediate objects so they can take part in later
    projection computations. ``evaluator(a, b)`` supplies new kernel values.
    """

    def __init__(self, values: np.ndarray, objects: Sequence[Any],
                 evaluator: Callable[[Any, Any], float]):
        values = np.asarray(values, dtype=np.float64)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ValueError("Gram matrix must be square")
        if values.shape[0] != len(objects):
            raise ValueError("Gram matrix size must match the object count")
        self.values = values
        self.objects = list(objects)
        self.base_n = len(objects)
        self.evaluator = evaluator

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def append(self, obj) -> int:
        """Add one object (n kernel evaluations); returns its new index."""
        k = self.n
        row = np.empty(k + 1)
        for i, other in enumerate(self.objects):
            row[i] = self.evaluator(obj, other)
        row[k] = self.evaluator(obj, obj)
        grown = np.empty((k + 1, k + 1))
        grown[:k, :k] = self.values
        grown[k, :] = row
        grown[:, k] = row
        self.values = grown
        self.objects.append(obj)
        return k


@dataclass
class WeightVector:
    """State of the kernel Weiszfeld iteration.

    The implicit median exists only through these weights: it is the
    weight-normalized combination of the embedded input objects.
    ``complex_count`` is the number of weight entries that picked up a
    nonzero imaginary part at any iteration (possible for indefinite
    kernels only). ``coincident`` is set when the guard for a vanishing
    median-to-object norm fired, naming the affected index.
    """

    weights: np.ndarray
    iteration: int = 0
    converged: bool = False
    complex_count: int = 0
    coincident: int | None = None

    def __post_init__(self):
        self.weights = np.asarray(self.weights, dtype=np.complex128)

    @property
    def n(self) -> int:
        return self.weights.shape[0]


@dataclass
class MedianResult:
    """A reconstructed median with its quality numbers and search trace."""

    median: Any
    sod: float
    sigma: float
    iterations: int
    trace: list = field(default_factory=list)
    normalized_sod: float | None = None
    complex_weight_count: int = 0


def normalize_distance(raw: Distance) -> Distance:
    """Wrap a raw distance so it is symmetric, zero-diagonal and nonnegative.

    Applies, in order: symmetrization by averaging both directions, diagonal
    removal by subtracting half of both self-distances, and absolute value.
    A distance already satisfying the three properties is returned unchanged
    pointwise.
    """

    def normalized(a, b) -> float:
        sym = 0.5 * (raw(a, b) + raw(b, a))
        return abs(sym - 0.5 * (raw(a, a) + raw(b, b)))

    return normalized


def cached_distance(distance: Distance) -> Distance:
    """Memoize a symmetric distance on hashable objects.

    Falls back to direct evaluation when an argument is unhashable.
    """
    cache: dict = {}

    def wrapped(a, b) -> float:
        try:
            key = (a, b) if hash(a) <= hash(b) else (b, a)
        except TypeError:
            return distance(a, b)
        hit = cache.get(key)
        if hit is None:
            hit = distance(a, b)
            cache[key] = hit
        return hit

    return wrapped


def sod(objset: ObjectSet, candidate, distance: Distance) -> float:
    """Sum of distances from every set member to ``candidate``."""
    return float(sum(distance(o, candidate) for o in objset.objects))


def kernel_squared_distance(gram: GramMatrix, a: int, b: int) -> float:
    """K(a,a) - 2 K(a,b) + K(b,b); negative values occur for indefinite kernels."""
    v = gram.values
    return float(v[a, a] - 2.0 * v[a, b] + v[b, b])


def principal_sqrt(z) -> complex:
    """Principal square root: nonnegative real part, +i branch on negative reals."""
    z = complex(z)
    if z.imag == 0.0:
        x = z.real
        if x >= 0.0:
            return complex(np.sqrt(x), 0.0)
        return complex(0.0, np.sqrt(-x))
    return complex(np.sqrt(complex(z.real, z.imag)))


def kernel_norm(gram: GramMatrix, a: int, b: int) -> complex:
    """Distance between two embedded objects, purely real or purely imaginary."""
    return principal_sqrt(kernel_squared_distance(gram, a, b))
