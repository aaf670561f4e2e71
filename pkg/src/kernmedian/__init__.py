"""Consensus objects through kernel-space median computation.

Given a set of objects, a distance and a weighted-mean function, the
library iterates Weiszfeld weights entirely through kernel values, then
reconstructs a median object by projecting the implicit optimum onto
segments between its nearest input objects. Ships string, clustering and
ranking domains, eight kernels, evaluation tooling and seeded generators.
"""

from ._hot import BACKEND
from .core import (
    CoincidentObjectsError,
    ConfigurationError,
    DegenerateWeightsError,
    DomainAdapter,
    GramMatrix,
    KernelSpec,
    MedianResult,
    ObjectSet,
    UndefinedCorrelationError,
    UndefinedNormalizationError,
    WeightVector,
    kernel_norm,
    kernel_squared_distance,
    normalize_distance,
    sod,
)
from .kernels import (
    OriginSet,
    dsk_eval,
    gram_matrix,
    kendall_kernel,
    partition_kernel,
    select_origins,
    ssk_eval,
)
from .reconstruct import (
    AlphaRatio,
    ReconstructionConfig,
    compute_median,
    kernel_alpha,
    linear_search,
    projection_alpha,
    reconstruct_recursive,
    reconstruct_seq,
    weighted_mean_best,
)
from .weiszfeld import (
    WeiszfeldConfig,
    explicit_weiszfeld,
    inner_xo,
    inner_xx,
    kernel_weiszfeld,
    weiszfeld_step,
)

__version__ = "0.1.0"


def backend() -> str:
    """Name of the active hot-loop backend: 'compiled' or 'pure'."""
    return BACKEND


__all__ = [
    "AlphaRatio",
    "CoincidentObjectsError",
    "ConfigurationError",
    "DegenerateWeightsError",
    "DomainAdapter",
    "GramMatrix",
    "KernelSpec",
    "MedianResult",
    "ObjectSet",
    "OriginSet",
    "ReconstructionConfig",
    "UndefinedCorrelationError",
    "UndefinedNormalizationError",
    "WeightVector",
    "WeiszfeldConfig",
    "backend",
    "compute_median",
    "dsk_eval",
    "explicit_weiszfeld",
    "gram_matrix",
    "inner_xo",
    "inner_xx",
    "kendall_kernel",
    "kernel_alpha",
    "kernel_norm",
    "kernel_squared_distance",
    "kernel_weiszfeld",
    "linear_search",
    "normalize_distance",
    "partition_kernel",
    "projection_alpha",
    "reconstruct_recursive",
    "reconstruct_seq",
    "select_origins",
    "sod",
    "ssk_eval",
    "weighted_mean_best",
    "weiszfeld_step",
]
