"""Enumerative rank/unrank over a prefix-counting oracle.

A set S of fixed-length symbol sequences is described only through
``count(prefix, s)``, the number of members of S that start with
``prefix + (s,)``. Symbols at each position are the integers
``0..alphabet_size(position) - 1`` and are ordered numerically; the rank of
a member is its position in the lexicographic order of S.
"""

from __future__ import annotations

from typing import List, Protocol, Sequence, Tuple

from .errors import GrasscodeError, OutOfRangeError


class PrefixOracle(Protocol):
    length: int

    def alphabet_size(self, position: int) -> int: ...

    def count(self, prefix: Tuple[int, ...], symbol: int) -> int: ...


def total(o: PrefixOracle) -> int:
    return sum(o.count((), s) for s in range(o.alphabet_size(0)))


def rank_sequence(x: Sequence[int], o: PrefixOracle) -> int:
    """Sum over positions of the counts of all smaller symbols at that position."""
    if len(x) != o.length:
        raise GrasscodeError(f"sequence length {len(x)} != {o.length}")
    index = 0
    prefix: Tuple[int, ...] = ()
    for pos, sym in enumerate(x):
        if not 0 <= sym < o.alphabet_size(pos):
            raise GrasscodeError(f"symbol {sym} outside the alphabet at position {pos}")
        for s in range(sym):
            index += o.count(prefix, s)
        if o.count(prefix, sym) == 0:
            raise GrasscodeError(f"{tuple(x)} is not a member of the enumerated set")
        prefix += (sym,)
    return index


def unrank_sequence(i: int, o: PrefixOracle) -> Tuple[int, ...]:
    if i < 0:
        raise OutOfRangeError(f"index {i} is negative")
    prefix: List[int] = []
    for pos in range(o.length):
        key = tuple(prefix)
        for s in range(o.alphabet_size(pos)):
            c = o.count(key, s)
            if i < c:
                prefix.append(s)
                break
            i -= c
        else:
            raise OutOfRangeError("index exceeds the size of the enumerated set")
    return tuple(prefix)


class ExplicitOracle:
    """Oracle backed by an explicit finite set of equal-length sequences."""

    def __init__(self, members, alphabet: Sequence[int]):
        self.members = {tuple(m) for m in members}
        self.length = len(alphabet)
        self._alphabet = tuple(alphabet)
        self._prefix_counts: dict = {}
        for m in self.members:
            for j in range(1, self.length + 1):
                self._prefix_counts[m[:j]] = self._prefix_counts.get(m[:j], 0) + 1

    def alphabet_size(self, position: int) -> int:
        return self._alphabet[position]

    def count(self, prefix, symbol) -> int:
        return self._prefix_counts.get(tuple(prefix) + (symbol,), 0)
