"""Backend selection for the hot inner loops.

Prefers the compiled extension; falls back to the NumPy implementations.
Set ``KERNMEDIAN_PURE=1`` to force the fallback (used by the backend
benchmark and the equivalence tests).
"""

import os

if os.environ.get("KERNMEDIAN_PURE", "") not in ("", "0"):
    from ._pure import (
        levenshtein,
        levenshtein_table,
        ranking_disagreements,
        subsequence_kernel,
    )

    BACKEND = "pure"
else:
    try:
        from ._speedups import (
            levenshtein,
            levenshtein_table,
            ranking_disagreements,
            subsequence_kernel,
        )

        BACKEND = "compiled"
    except ImportError:
        from ._pure import (
            levenshtein,
            levenshtein_table,
            ranking_disagreements,
            subsequence_kernel,
        )

        BACKEND = "pure"

__all__ = [
    "BACKEND",
    "levenshtein",
    "levenshtein_table",
    "ranking_disagreements",
    "subsequence_kernel",
]
