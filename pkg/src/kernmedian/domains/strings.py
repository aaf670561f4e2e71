"""String space: Levenshtein distance and edit-path weighted mean."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .. import _hot
from ..core import DomainAdapter


def levenshtein(s1: str, s2: str) -> int:
    """Minimal number of unit-cost substitutions, insertions and deletions."""
    return int(_hot.levenshtein(s1, s2))


@dataclass(frozen=True)
class EditScript:
    """One minimal edit path from a source to a target string.

    ``operations`` holds ("substitute", pos, char), ("insert", pos, char) or
    ("delete", pos) tuples in application order, positions referring to the
    working string at that point; ``intermediates`` holds the string after
    each operation, ending at the target.
    """

    operations: tuple
    intermediates: tuple


def edit_script(s1: str, s2: str) -> EditScript:
    """Canonical minimal edit script from s1 to s2.

    Minimal paths are not unique; this walk resolves ties left to right,
    preferring substitution over deletion over insertion, which keeps the
    result deterministic.
    """
    prefix = _hot.levenshtein_table(s1, s2)
    suffix = _hot.levenshtein_table(s1[::-1], s2[::-1])[::-1, ::-1]
    n, m = len(s1), len(s2)
    total = int(prefix[n, m])
    ops: list[tuple] = []
    intermediates: list[str] = []
    i = j = 0
    while i < n or j < m:
        here = int(prefix[i, j])
        if i < n and j < m:
            cost = 0 if s1[i] == s2[j] else 1
            if here + cost + int(suffix[i + 1, j + 1]) == total:
                if cost:
                    ops.append(("substitute", j, s2[j]))
                    intermediates.append(s2[: j + 1] + s1[i + 1:])
                i += 1
                j += 1
                continue
        if i < n and here + 1 + int(suffix[i + 1, j]) == total:
            ops.append(("delete", j))
            intermediates.append(s2[:j] + s1[i + 1:])
            i += 1
            continue
        ops.append(("insert", j, s2[j]))
        intermediates.append(s2[: j + 1] + s1[i:])
        j += 1
    return EditScript(tuple(ops), tuple(intermediates))


def string_weighted_mean(s1: str, s2: str, alpha: float) -> str:
    """String at ratio alpha along a canonical minimal edit path.

    Applies round(alpha * distance) operations of the canonical script, so
    the result m satisfies distance(s1, m) + distance(m, s2) =
    distance(s1, s2) and |distance(s1, m) - alpha * distance(s1, s2)| <= 0.5.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError("alpha must lie in [0, 1]")
    script = edit_script(s1, s2)
    d = len(script.operations)
    if d == 0:
        return s1
    k = int(math.floor(alpha * d + 0.5))
    if k == 0:
        return s1
    return script.intermediates[k - 1]


ADAPTER = DomainAdapter("string", levenshtein, string_weighted_mean)
