# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Bit-packed GF(2) kernels used by the lexicode search.

Rows are uint64 masks, so ambient dimension is limited to 64.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil

cdef enum:
    MAX_ROWS = 128


cdef inline int _rank(uint64_t* rows, int m) noexcept nogil:
    cdef int r = 0, i, j
    cdef uint64_t piv, low
    for i in range(m):
        piv = rows[i]
        if piv == 0:
            continue
        low = piv & (~piv + 1)
        r += 1
        for j in range(i + 1, m):
            if rows[j] & low:
                rows[j] ^= piv
    return r


def gf2_rank(rows):
    """Rank over GF(2) of a sequence of row masks."""
    cdef uint64_t buf[MAX_ROWS]
    cdef int m = len(rows), i
    if m > MAX_ROWS:
        raise ValueError(f"at most {MAX_ROWS} rows supported")
    for i in range(m):
        buf[i] = rows[i]
    return _rank(buf, m)


def first_conflict(const uint64_t[::1] code, const uint64_t[::1] cand, int k, int need,
                   Py_ssize_t start=0, Py_ssize_t stop=-1):
    """Index of the first codeword c in [start, stop) with rank(c + cand) < need, else -1.

    ``code`` holds the codewords back to back, k masks each, every codeword
    in reduced row echelon form (leading bit of a row appears in no other row).
    """
    cdef uint64_t buf[MAX_ROWS]
    cdef uint64_t lead[MAX_ROWS]
    cdef uint64_t r
    cdef Py_ssize_t ncode = code.shape[0] // k if k else 0
    cdef Py_ssize_t c, hit = -1
    cdef int i, j, extra = need - k
    if 2 * k > MAX_ROWS:
        raise ValueError(f"k must be at most {MAX_ROWS // 2}")
    if stop < 0 or stop > ncode:
        stop = ncode
    with nogil:
        for c in range(start, stop):
            for j in range(k):
                r = code[c * k + j]
                lead[j] = (<uint64_t>1) << (63 - __builtin_clzll(r)) if r else 0
            for i in range(k):
                r = cand[i]
                for j in range(k):
                    if r & lead[j]:
                        r ^= code[c * k + j]
                buf[i] = r
            if _rank(buf, k) < extra:
                hit = c
                break
    return hit
