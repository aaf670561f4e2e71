# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops.

Edit-distance dynamic programs, the fixed-length subsequence kernel and
pairwise rank-disagreement counting dominate the runtime of Gram-matrix
construction, so they live here. `kernmedian._pure` provides the same
functions in NumPy for installs without a compiler.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def _codepoints(s):
    """Unicode codepoints of ``s`` as a uint32 array."""
    return np.frombuffer(s.encode("utf-32-le"), dtype=np.uint32)


cdef Py_ssize_t _imin3(Py_ssize_t a, Py_ssize_t b, Py_ssize_t c):
    if b < a:
        a = b
    if c < a:
        a = c
    return a


def levenshtein(s1, s2):
    """Unit-cost edit distance between two strings."""
    cdef const cnp.uint32_t[::1] a = _codepoints(s1)
    cdef const cnp.uint32_t[::1] b = _codepoints(s2)
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = b.shape[0]
    if n == 0:
        return m
    if m == 0:
        return n
    cdef cnp.int64_t[::1] prev = np.arange(m + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] cur = np.empty(m + 1, dtype=np.int64)
    cdef Py_ssize_t i, j
    cdef cnp.int64_t cost
    for i in range(n):
        cur[0] = i + 1
        for j in range(1, m + 1):
            cost = 0 if a[i] == b[j - 1] else 1
            cur[j] = _imin3(prev[j - 1] + cost, prev[j] + 1, cur[j - 1] + 1)
        prev, cur = cur, prev
    return int(prev[m])


def levenshtein_table(s1, s2):
    """Full (len1+1, len2+1) prefix-distance table for edit-script backtraces."""
    cdef const cnp.uint32_t[::1] a = _codepoints(s1)
    cdef const cnp.uint32_t[::1] b = _codepoints(s2)
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = b.shape[0]
    table = np.empty((n + 1, m + 1), dtype=np.int64)
    cdef cnp.int64_t[:, ::1] d = table
    cdef Py_ssize_t i, j
    cdef cnp.int64_t cost
    for j in range(m + 1):
        d[0, j] = j
    for i in range(1, n + 1):
        d[i, 0] = i
        for j in range(1, m + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            d[i, j] = _imin3(d[i - 1, j - 1] + cost, d[i - 1, j] + 1, d[i, j - 1] + 1)
    return table


def subsequence_kernel(s1, s2, Py_ssize_t length, double decay):
    """Inner product of fixed-length gappy-subsequence feature maps.

    Each occurrence of a subsequence u (indices i1 < ... < i_length) is
    weighted decay**(i_length - i1 + 1); the kernel sums the products of
    these weights over all shared subsequences, via the usual dynamic
    program instead of explicit feature vectors.
    """
    cdef const cnp.uint32_t[::1] a = _codepoints(s1)
    cdef const cnp.uint32_t[::1] b = _codepoints(s2)
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = b.shape[0]
    if n < length or m < length:
        return 0.0
    cdef double lam2 = decay * decay
    cdef cnp.float64_t[:, ::1] kp = np.ones((n + 1, m + 1), dtype=np.float64)
    cdef cnp.float64_t[:, ::1] kp_next
    cdef Py_ssize_t l, i, j
    cdef double acc, result
    for l in range(1, length):
        kp_next = np.zeros((n + 1, m + 1), dtype=np.float64)
        for i in range(l, n + 1):
            acc = 0.0
            for j in range(l, m + 1):
                acc = decay * acc
                if a[i - 1] == b[j - 1]:
                    acc += lam2 * kp[i - 1, j - 1]
                kp_next[i, j] = decay * kp_next[i - 1, j] + acc
        kp = kp_next
    result = 0.0
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            if a[i - 1] == b[j - 1]:
                result += lam2 * kp[i - 1, j - 1]
    return result


def ranking_disagreements(pos1, pos2):
    """Generalized pairwise disagreement count between two bucket-position maps.

    Counts 1 per item pair ranked in strictly opposite order and 0.5 per
    pair tied in exactly one of the two rankings.
    """
    cdef const cnp.int64_t[::1] p = np.ascontiguousarray(pos1, dtype=np.int64)
    cdef const cnp.int64_t[::1] q = np.ascontiguousarray(pos2, dtype=np.int64)
    if p.shape[0] != q.shape[0]:
        raise ValueError("position arrays must have equal length")
    cdef Py_ssize_t m = p.shape[0]
    cdef Py_ssize_t i, j
    cdef int d1, d2
    cdef double total = 0.0
    for i in range(m):
        for j in range(i + 1, m):
            d1 = (p[i] > p[j]) - (p[i] < p[j])
            d2 = (q[i] > q[j]) - (q[i] < q[j])
            if d1 == 0 or d2 == 0:
                if d1 != d2:
                    total += 0.5
            elif d1 != d2:
                total += 1.0
    return total
