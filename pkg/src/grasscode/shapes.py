"""Box-bounded partition counts, Gaussian coefficients and Ferrers diagram ranking."""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from . import enumcode
from .errors import GrasscodeError, OutOfRangeError
from .linalg import FerrersDiagram


class PartitionCache:
    """Memo table for p(m, k, eta); unbounded, shared by all callers."""

    def __init__(self):
        self._table: Dict[Tuple[int, int, int], int] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._table)

    def clear(self) -> None:
        with self._lock:
            self._table.clear()

    def p(self, m: int, k: int, eta: int) -> int:
        if m < 0 or m > k * eta:
            return 0
        if m == 0:
            return 1
        if k == 1:
            return 1  # 1 <= m <= eta here
        if eta == 1:
            return 1  # 1 <= m <= k here
        if 2 * m > k * eta:
            m = k * eta - m
        key = (m, k, eta)
        hit = self._table.get(key)
        if hit is not None:
            return hit
        # drop the full first column of height k, or shrink the box height
        value = self.p(m - k, k, eta - 1) + self.p(m, k - 1, eta)
        with self._lock:
            self._table[key] = value
        return value


DEFAULT_CACHE = PartitionCache()


def p_box(m: int, k: int, eta: int, cache: PartitionCache = None) -> int:
    """Number of Ferrers diagrams with m dots inside a k x eta box."""
    if k < 0 or eta < 0:
        raise GrasscodeError(f"box dimensions must be nonnegative, got {k}x{eta}")
    return (DEFAULT_CACHE if cache is None else cache).p(m, k, eta)


def alphas(n: int, k: int, cache: PartitionCache = None) -> Tuple[int, ...]:
    """(alpha_0, ..., alpha_{k(n-k)}) for the k x (n-k) box."""
    return tuple(p_box(m, k, n - k, cache) for m in range(k * (n - k) + 1))


def gaussian_product(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    return num // den


@lru_cache(maxsize=None)
def gaussian(n: int, k: int, q: int) -> int:
    """[n k]_q as the partition sum, checked against the product formula."""
    if k < 0 or k > n:
        return 0
    value = sum(a * q ** ell for ell, a in enumerate(alphas(n, k)))
    if value != gaussian_product(n, k, q):
        raise ArithmeticError(f"partition sum and product formula disagree for [{n} {k}]_{q}")
    return value


def gaussian_table(n: int, k: int, q: int) -> List[List[int]]:
    """table[a][b] = [a b]_q for 0 <= a <= n, 0 <= b <= k, via the q-Pascal rule."""
    table = [[0] * (k + 1) for _ in range(n + 1)]
    for a in range(n + 1):
        table[a][0] = 1
        for b in range(1, min(a, k) + 1):
            table[a][b] = table[a - 1][b - 1] + q ** b * table[a - 1][b]
    return table


def _check_prefix(prefix: Sequence[int], k: int, eta: int) -> None:
    if len(prefix) > eta:
        raise GrasscodeError(f"prefix longer than the box width {eta}")
    prev = k
    for f in reversed(prefix):
        if not 0 <= f <= prev:
            raise GrasscodeError(f"prefix {tuple(prefix)} is not monotone inside the box")
        prev = f


def n_m_count(prefix: Sequence[int], m: int, k: int, eta: int, cache: PartitionCache = None) -> int:
    """Diagrams of size m whose rightmost j columns are ``prefix`` = (F_j, ..., F_1)."""
    _check_prefix(prefix, k, eta)
    j = len(prefix)
    height = prefix[0] if prefix else k
    return p_box(m - sum(prefix), height, eta - j, cache)


def ferrers_rank(f: FerrersDiagram, cache: PartitionCache = None) -> int:
    """Index of f among same-size diagrams; more dots in the first differing column ranks first."""
    m, k, eta = f.size, f.k, f.eta
    cols = f.right_to_left()
    index = 0
    prev, used = k, 0
    for j, fj in enumerate(cols, start=1):
        for a in range(fj + 1, prev + 1):
            index += p_box(m - used - a, a, eta - j, cache)
        used += fj
        prev = fj
    return index


class _ColumnOracle:
    """Columns F_1, F_2, ... of size-m diagrams; symbol s means height k - s."""

    def __init__(self, m: int, k: int, eta: int, cache: PartitionCache = None):
        self.m, self.k, self.eta, self.cache = m, k, eta, cache
        self.length = eta

    def alphabet_size(self, position: int) -> int:
        return self.k + 1

    def count(self, prefix, symbol) -> int:
        heights = [self.k - s for s in prefix]
        a = self.k - symbol
        if a > (heights[-1] if heights else self.k):
            return 0
        j = len(heights) + 1
        return p_box(self.m - sum(heights) - a, a, self.eta - j, self.cache)


def ferrers_unrank(m: int, i: int, k: int, eta: int, cache: PartitionCache = None) -> FerrersDiagram:
    size = p_box(m, k, eta, cache)
    if not 0 <= i < size:
        raise OutOfRangeError(f"index {i} outside 0..{size - 1} for size-{m} diagrams in a {k}x{eta} box")
    if eta == 0:
        return FerrersDiagram(k, 0, ())
    symbols = enumcode.unrank_sequence(i, _ColumnOracle(m, k, eta, cache))
    return FerrersDiagram(k, eta, tuple(k - s for s in reversed(symbols)))


def ferrers_key(f: FerrersDiagram) -> Tuple[int, int]:
    return (-f.size, ferrers_rank(f))


def compare_ferrers(f: FerrersDiagram, g: FerrersDiagram) -> int:
    """-1, 0 or 1: larger diagrams come first, equal sizes by rank."""
    if (f.k, f.eta) != (g.k, g.eta):
        raise GrasscodeError("diagrams live in different boxes")
    a, b = ferrers_key(f), ferrers_key(g)
    return (a > b) - (a < b)


def all_diagrams(k: int, eta: int, m: int = None):
    """Every diagram in the box (optionally only size m), in no particular order."""

    def extend(prefix, prev):
        if len(prefix) == eta:
            if m is None or sum(prefix) == m:
                yield FerrersDiagram(k, eta, tuple(reversed(prefix)))
            return
        for a in range(prev + 1):
            yield from extend(prefix + [a], a)

    yield from extend([], k)
