"""Pure-Python twins of the routines in ``_kernels.pyx``; same signatures, same results."""

from __future__ import annotations

MAX_ROWS = 128


def gf2_rank(rows) -> int:
    """Rank over GF(2) of a sequence of row masks."""
    work = list(rows)
    if len(work) > MAX_ROWS:
        raise ValueError(f"at most {MAX_ROWS} rows supported")
    r = 0
    for i, piv in enumerate(work):
        if not piv:
            continue
        low = piv & -piv
        r += 1
        for j in range(i + 1, len(work)):
            if work[j] & low:
                work[j] ^= piv
    return r


def first_conflict(code, cand, k: int, need: int, start: int = 0, stop: int = -1) -> int:
    """Index of the first codeword c in [start, stop) with rank(c + cand) < need, else -1.

    Codewords must be in reduced row echelon form, as for the compiled kernel.
    """
    if 2 * k > MAX_ROWS:
        raise ValueError(f"k must be at most {MAX_ROWS // 2}")
    ncode = len(code) // k if k else 0
    if stop < 0 or stop > ncode:
        stop = ncode
    extra = need - k
    for c in range(start, stop):
        word = code[c * k:(c + 1) * k]
        leads = [1 << (r.bit_length() - 1) if r else 0 for r in word]
        reduced = []
        for r in cand:
            for row, lead in zip(word, leads):
                if r & lead:
                    r ^= row
            reduced.append(r)
        if gf2_rank(reduced) < extra:
            return c
    return -1
