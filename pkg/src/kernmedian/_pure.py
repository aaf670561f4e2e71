"""NumPy fallback for the compiled hot loops in ``_speedups``.

Same signatures and semantics, selected by ``kernmedian._hot`` when the
extension is unavailable or ``KERNMEDIAN_PURE`` is set. Slower, but keeps
the package importable from a plain source checkout.
"""

from __future__ import annotations

import math

import numpy as np


def _codepoints(s: str) -> np.ndarray:
    return np.frombuffer(s.encode("utf-32-le"), dtype=np.uint32)


def levenshtein(s1: str, s2: str) -> int:
    a = _codepoints(s1)
    b = _codepoints(s2)
    if a.size == 0:
        return int(b.size)
    if b.size == 0:
        return int(a.size)
    jj = np.arange(b.size + 1, dtype=np.int64)
    prev = jj.copy()
    cur = np.empty_like(prev)
    for ch in a:
        cur[0] = prev[0] + 1
        cur[1:] = np.minimum(prev[:-1] + (b != ch), prev[1:] + 1)
        # propagate insertions left-to-right: min over j' <= j of cur[j'] + (j - j')
        np.minimum.accumulate(cur - jj, out=cur)
        cur += jj
        prev, cur = cur, prev
    return int(prev[-1])


def levenshtein_table(s1: str, s2: str) -> np.ndarray:
    a = _codepoints(s1)
    b = _codepoints(s2)
    n, m = a.size, b.size
    d = np.empty((n + 1, m + 1), dtype=np.int64)
    jj = np.arange(m + 1, dtype=np.int64)
    d[0] = jj
    for i in range(1, n + 1):
        d[i, 0] = i
        d[i, 1:] = np.minimum(d[i - 1, :-1] + (b != a[i - 1]), d[i - 1, 1:] + 1)
        np.minimum.accumulate(d[i] - jj, out=d[i])
        d[i] += jj
    return d


def _decaying_cumsum(t: np.ndarray, lam: float) -> np.ndarray:
    """y[j] = lam * y[j-1] + t[j], computed blockwise to avoid lam**-j overflow."""
    m = t.shape[0]
    y = np.empty(m, dtype=np.float64)
    if lam == 1.0:
        np.cumsum(t, out=y)
        return y
    block = max(1, min(64, int(250.0 / -math.log10(lam))))
    inv = (1.0 / lam) ** np.arange(block)
    fwd = lam ** np.arange(block)
    carry_pow = lam ** np.arange(1, block + 1)
    carry = 0.0
    for start in range(0, m, block):
        chunk = t[start:start + block]
        k = chunk.shape[0]
        scaled = np.cumsum(chunk * inv[:k])
        y[start:start + k] = carry_pow[:k] * carry + fwd[:k] * scaled
        carry = y[start + k - 1]
    return y


def subsequence_kernel(s1: str, s2: str, length: int, decay: float) -> float:
    a = _codepoints(s1)
    b = _codepoints(s2)
    n, m = a.size, b.size
    if n < length or m < length:
        return 0.0
    lam2 = decay * decay
    match = (a[:, None] == b[None, :])
    kp = np.ones((n + 1, m + 1), dtype=np.float64)
    for level in range(1, length):
        kp_next = np.zeros((n + 1, m + 1), dtype=np.float64)
        for i in range(level, n + 1):
            u = lam2 * match[i - 1, level - 1:m] * kp[i - 1, level - 1:m]
            kp_next[i, level:] = decay * kp_next[i - 1, level:] + _decaying_cumsum(u, decay)
        kp = kp_next
    return float(lam2 * np.sum(match * kp[:-1, :-1]))


def ranking_disagreements(pos1, pos2) -> float:
    p = np.asarray(pos1, dtype=np.int64)
    q = np.asarray(pos2, dtype=np.int64)
    if p.shape != q.shape:
        raise ValueError("position arrays must have equal length")
    if p.size < 2:
        return 0.0
    d1 = np.sign(p[:, None] - p[None, :])
    d2 = np.sign(q[:, None] - q[None, :])
    iu = np.triu_indices(p.size, 1)
    a = d1[iu]
    b = d2[iu]
    tied_in_one = (a == 0) ^ (b == 0)
    opposite = a * b == -1
    return float(opposite.sum() + 0.5 * tied_in_one.sum())
