"""Matrices over F_q, RREF canonicalization and subspace representations.

Matrices are tuples of row tuples stored left to right. The right-to-left
column numbering used by the extended representation and by Ferrers
diagrams is applied only at the boundary (``ext_column``,
``FerrersDiagram.right_to_left``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

from .errors import GrasscodeError, OutOfRangeError
from .field import FieldTable, build_field

Row = Tuple[int, ...]
Matrix = Tuple[Row, ...]


def _check_entries(rows: Sequence[Sequence[int]], q: int) -> None:
    for row in rows:
        for a in row:
            if not isinstance(a, int) or not 0 <= a < q:
                raise OutOfRangeError(f"entry {a!r} is not an element of F_{q}")


def _rref_gf2(rows: Sequence[Sequence[int]], ncols: int) -> Tuple[Matrix, int]:
    # bit (ncols - 1 - c) holds column c, so integer order follows left-to-right
    masks = []
    for row in rows:
        m = 0
        for a in row:
            m = (m << 1) | a
        masks.append(m)
    r = 0
    for c in range(ncols):
        bit = 1 << (ncols - 1 - c)
        for i in range(r, len(masks)):
            if masks[i] & bit:
                masks[r], masks[i] = masks[i], masks[r]
                piv = masks[r]
                for j in range(len(masks)):
                    if j != r and masks[j] & bit:
                        masks[j] ^= piv
                r += 1
                break
    out = tuple(tuple((m >> (ncols - 1 - c)) & 1 for c in range(ncols)) for m in masks[:r])
    return out, len(out)


def rref(rows: Sequence[Sequence[int]], t: FieldTable, ncols: int = None) -> Tuple[Matrix, int]:
    """Gauss-Jordan elimination; zero rows are dropped from the result."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if any(len(r) != ncols for r in rows):
        raise GrasscodeError("rows have inconsistent lengths")
    _check_entries(rows, t.q)
    if t.q == 2:
        return _rref_gf2(rows, ncols)

    add, mul, neg, inv = t.add_table, t.mul_table, t.neg_table, t.inv_table
    m = [list(r) for r in rows]
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        s = inv[m[rank][c]]
        prow = [mul[s][a] for a in m[rank]]
        m[rank] = prow
        for i in range(len(m)):
            f = m[i][c]
            if i != rank and f:
                nf = neg[f]
                m[i] = [add[a][mul[nf][b]] for a, b in zip(m[i], prow)]
        rank += 1
        if rank == len(m):
            break
    return tuple(tuple(r) for r in m[:rank]), rank


def rank(rows: Sequence[Sequence[int]], t: FieldTable, ncols: int = None) -> int:
    return rref(rows, t, ncols)[1]


def is_rref(rows: Sequence[Sequence[int]]) -> bool:
    last = -1
    for i, row in enumerate(rows):
        lead = next((c for c, a in enumerate(row) if a), None)
        if lead is None or lead <= last or row[lead] != 1:
            return False
        if any(rows[j][lead] for j in range(len(rows)) if j != i):
            return False
        last = lead
    return True


@dataclass(frozen=True)
class Subspace:
    """A k-dimensional subspace of F_q^n held as its RREF generator matrix."""

    n: int
    k: int
    q: int
    rows: Matrix

    def __post_init__(self):
        if len(self.rows) != self.k or any(len(r) != self.n for r in self.rows):
            raise GrasscodeError("RREF shape does not match (k, n)")
        if not is_rref(self.rows):
            raise GrasscodeError("matrix is not in reduced row echelon form")

    @classmethod
    def _trusted(cls, n: int, k: int, q: int, rows: Matrix) -> "Subspace":
        # rows already known to be a k x n RREF; skips validation
        x = object.__new__(cls)
        object.__setattr__(x, "n", n)
        object.__setattr__(x, "k", k)
        object.__setattr__(x, "q", q)
        object.__setattr__(x, "rows", rows)
        return x

    @classmethod
    def from_generators(cls, rows: Sequence[Sequence[int]], q: int, n: int = None) -> "Subspace":
        """Canonicalize any generator matrix (any basis, dependent rows allowed)."""
        if n is None:
            if not rows:
                raise GrasscodeError("ambient dimension needed for an empty generator set")
            n = len(rows[0])
        re, r = rref(rows, build_field(q), n)
        return cls(n, r, q, re)

    @property
    def pivots(self) -> Tuple[int, ...]:
        """0-based pivot columns, left to right."""
        return tuple(next(c for c, a in enumerate(row) if a) for row in self.rows)

    @property
    def idvec(self) -> Tuple[int, ...]:
        return identifying_vector(self)

    def bitmasks(self) -> Tuple[int, ...]:
        """Rows as integers, leftmost column in the highest bit (q = 2 only)."""
        if self.q != 2:
            raise GrasscodeError("bit packing needs q = 2")
        out = []
        for row in self.rows:
            m = 0
            for a in row:
                m = (m << 1) | a
            out.append(m)
        return tuple(out)

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


def identifying_vector(x: Subspace) -> Tuple[int, ...]:
    v = [0] * x.n
    for c in x.pivots:
        v[c] = 1
    return tuple(v)


def extended_rep(x: Subspace) -> Matrix:
    """(k+1) x n stack of the identifying vector over RE(X), stored left to right."""
    return (identifying_vector(x),) + x.rows


def ext_column(x: Subspace, j: int) -> Row:
    """Column j of EXT(X) with j = 1 the rightmost column; identifying bit first."""
    if not 1 <= j <= x.n:
        raise OutOfRangeError(f"column {j} outside 1..{x.n}")
    c = x.n - j
    return tuple(r[c] for r in extended_rep(x))


def column_value(col: Sequence[int], q: int) -> int:
    """Base-q value of a column vector with its first entry most significant."""
    value = 0
    for a in col:
        value = value * q + a
    return value


@dataclass(frozen=True)
class FerrersDiagram:
    """Ferrers diagram in a k x eta box, ``cols`` = (F_eta, ..., F_1).

    F_i counts the dots in the i-th column from the right. Rows may be empty.
    """

    k: int
    eta: int
    cols: Tuple[int, ...]

    def __post_init__(self):
        if len(self.cols) != self.eta:
            raise GrasscodeError(f"expected {self.eta} column counts, got {len(self.cols)}")
        prev = self.k
        for f in reversed(self.cols):
            if not 0 <= f <= prev:
                raise GrasscodeError(f"column counts {self.cols} do not form a diagram in a {self.k}x{self.eta} box")
            prev = f

    @property
    def size(self) -> int:
        return sum(self.cols)

    def right_to_left(self) -> Tuple[int, ...]:
        """(F_1, F_2, ..., F_eta)."""
        return tuple(reversed(self.cols))

    def row_counts(self) -> Tuple[int, ...]:
        """Dots per row, top to bottom, k entries (zeros included)."""
        return tuple(sum(1 for f in self.cols if f >= i) for i in range(1, self.k + 1))

    @classmethod
    def from_rows(cls, rows: Sequence[int], k: int, eta: int) -> "FerrersDiagram":
        rows = list(rows) + [0] * (k - len(rows))
        return cls(k, eta, tuple(sum(1 for r in rows if r >= c) for c in range(eta, 0, -1)))

    def __str__(self) -> str:
        return "\n".join(" " * (self.eta - r) + "*" * r for r in self.row_counts())


def _check_weight(v: Sequence[int], n: int, k: int) -> None:
    if len(v) != n or any(b not in (0, 1) for b in v):
        raise GrasscodeError(f"identifying vector must be a binary vector of length {n}")
    if sum(v) != k:
        raise GrasscodeError(f"identifying vector has weight {sum(v)}, expected {k}")


def vector_to_diagram(v: Sequence[int], n: int, k: int) -> FerrersDiagram:
    _check_weight(v, n, k)
    positions = [c + 1 for c, b in enumerate(v) if b]
    rows = [n - p - (k - i) for i, p in enumerate(positions, start=1)]
    return FerrersDiagram.from_rows(rows, k, n - k)


def diagram_to_vector(f: FerrersDiagram, n: int, k: int) -> Tuple[int, ...]:
    if f.k != k or f.eta != n - k:
        raise GrasscodeError("diagram does not fit the k x (n-k) box")
    v = [0] * n
    for i, rho in enumerate(f.row_counts(), start=1):
        v[n - (k - i) - rho - 1] = 1
    return tuple(v)


def dot_positions(v: Sequence[int]) -> List[Tuple[int, int]]:
    """(row, col) of every dot of EF(v), right to left within a row, rows top to bottom."""
    return list(_dots(tuple(v)))


@lru_cache(maxsize=4096)
def _dots(v: Tuple[int, ...]) -> Tuple[Tuple[int, int], ...]:
    pivots = [c for c, b in enumerate(v) if b]
    pivot_set = set(pivots)
    out = []
    for i, p in enumerate(pivots):
        out.extend((i, c) for c in range(len(v) - 1, p, -1) if c not in pivot_set)
    return tuple(out)


@dataclass(frozen=True)
class FerrersTableaux:
    diagram: FerrersDiagram
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.diagram.size:
            raise GrasscodeError(f"{len(self.entries)} entries for a diagram of size {self.diagram.size}")

    def display_rows(self) -> List[Tuple[int, ...]]:
        """Entries per row as drawn (left to right)."""
        out, pos = [], 0
        for r in self.diagram.row_counts():
            out.append(tuple(reversed(self.entries[pos:pos + r])))
            pos += r
        return out


def tableaux_of_subspace(x: Subspace) -> FerrersTableaux:
    v = identifying_vector(x)
    entries = tuple(x.rows[i][c] for i, c in dot_positions(v))
    return FerrersTableaux(vector_to_diagram(v, x.n, x.k), entries)


def subspace_of_tableaux(f: FerrersTableaux, n: int, k: int, q: int) -> Subspace:
    for a in f.entries:
        if not 0 <= a < q:
            raise OutOfRangeError(f"entry {a} is not an element of F_{q}")
    v = diagram_to_vector(f.diagram, n, k)
    return subspace_from_dots(v, f.entries, q)


def subspace_from_dots(v: Sequence[int], entries: Sequence[int], q: int) -> Subspace:
    """Fill EF(v) with ``entries`` in dot order (see ``dot_positions``)."""
    n = len(v)
    pivots = [c for c, b in enumerate(v) if b]
    m = [[0] * n for _ in pivots]
    for i, p in enumerate(pivots):
        m[i][p] = 1
    for (i, c), a in zip(_dots(tuple(v)), entries):
        m[i][c] = a
    return Subspace._trusted(n, len(pivots), q, tuple(tuple(r) for r in m))


def subspace_distance(x: Subspace, y: Subspace) -> int:
    """dim X + dim Y - 2 dim(X ∩ Y), via the rank of the stacked generators."""
    if x.n != y.n or x.q != y.q:
        raise GrasscodeError("subspaces live in different ambient spaces")
    r = rank(x.rows + y.rows, build_field(x.q), x.n)
    return 2 * r - x.k - y.k

