"""Brute-force reference computations, deliberately independent of the package code paths."""

from __future__ import annotations

import itertools
from typing import List, Sequence, Tuple


def prime_field_span(rows: Sequence[Sequence[int]], q: int) -> frozenset:
    """All linear combinations of ``rows`` over a prime field F_q."""
    n = len(rows[0]) if rows else 0
    out = set()
    for coeffs in itertools.product(range(q), repeat=len(rows)):
        out.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % q for j in range(n)))
    if not rows:
        out.add(())
    return frozenset(out)


def looks_like_rref(rows) -> bool:
    leads = []
    for row in rows:
        nz = [c for c, a in enumerate(row) if a]
        if not nz or row[nz[0]] != 1:
            return False
        leads.append(nz[0])
    if leads != sorted(set(leads)):
        return False
    return all(sum(1 for r in rows if r[c]) == 1 for c in leads)


def all_rref_matrices(n: int, k: int, q: int) -> List[Tuple[Tuple[int, ...], ...]]:
    """Every k x n RREF over F_q by filtering all matrices (keep q^(nk) small)."""
    out = []
    for flat in itertools.product(range(q), repeat=n * k):
        rows = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(k))
        if looks_like_rref(rows):
            out.append(rows)
    return out


def box_diagrams(k: int, eta: int):
    """Column vectors (F_eta, ..., F_1) of every diagram in a k x eta box."""
    for cols in itertools.product(range(k + 1), repeat=eta):
        # left to right storage: F_eta <= ... <= F_1
        if all(cols[i] <= cols[i + 1] for i in range(eta - 1)):
            yield cols


def ferrers_sort_key(cols):
    """More dots in the rightmost differing column sorts first."""
    return tuple(-f for f in reversed(cols))


def ext_key(rows, n: int, k: int, q: int):
    """Column values of (idvec over RREF), rightmost column first, top digit most significant."""
    leads = {next(c for c, a in enumerate(r) if a) for r in rows}
    key = []
    for c in range(n - 1, -1, -1):
        value = 1 if c in leads else 0
        for r in rows:
            value = value * q + r[c]
        key.append(value)
    return tuple(key)


def tableaux_sort_key(rows, n: int, k: int):
    """(-size, diagram order, entries) with entries right to left per row, rows top to bottom."""
    leads = [next(c for c, a in enumerate(r) if a) for r in rows]
    free = [c for c in range(n) if c not in leads]
    row_counts = [sum(1 for c in free if c > p) for p in leads]
    cols = tuple(sum(1 for rc in row_counts if rc >= i) for i in range(n - k, 0, -1))
    entries = tuple(rows[i][c] for i, p in enumerate(leads) for c in reversed(free) if c > p)
    return (-sum(cols), ferrers_sort_key(cols), entries)


def greedy_code(ordered, distance, d: int):
    code = []
    for x in ordered:
        if all(distance(x, c) >= d for c in code):
            code.append(x)
    return code


def columns_under(v, q: int, k: int):
    """For identifying vector v: per column (right to left) the set of extended column values a
    subspace with that vector can take, and the number of free entries in that column."""
    n = len(v)
    out = []
    w = 0
    for c in range(n - 1, -1, -1):
        if v[c]:
            row = k - 1 - w  # rows top to bottom follow pivots left to right
            out.append(({q ** k + q ** (k - 1 - row)}, 0))
            w += 1
        else:
            free = k - w
            out.append(({val * q ** w for val in range(q ** free)}, free))
    return out


def succeeding_with_vector(x_key, v, q: int, k: int) -> int:
    """Subspaces with identifying vector v that follow the extended key ``x_key``."""
    cols = columns_under(v, q, k)
    count = 0
    for j, (values, _) in enumerate(cols):
        remaining = sum(free for _, free in cols[j + 1:])
        cx = x_key[j]
        count += sum(1 for val in values if val > cx) * q ** remaining
        if cx not in values:
            break
    return count
