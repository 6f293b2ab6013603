"""Enumerative encodings of the Grassmannian G_q(n, k).

Three bijections between G_q(n, k) and ``range(gaussian(n, k, q))``:

* ``encode_ferrers`` / ``decode_ferrers``: order by Ferrers diagram
  (larger diagrams first, then diagram rank), then by the tableaux entries
  read right to left, top to bottom, first entry most significant.
* ``encode_extended`` / ``decode_extended``: lexicographic order of the
  columns of the extended representation, read from the right, where a
  column is valued as a base-q number with the identifying bit on top.
* ``encode_hybrid`` / ``decode_hybrid``: subspaces whose diagram has at
  least ``threshold`` dots use the Ferrers index; the rest are ranked in
  extended order after them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterator, List, Tuple

from .errors import GrasscodeError, OutOfRangeError
from .field import build_field
from .linalg import (
    Subspace,
    column_value,
    diagram_to_vector,
    identifying_vector,
    subspace_from_dots,
    tableaux_of_subspace,
)
from .shapes import all_diagrams, alphas, ferrers_rank, ferrers_unrank, gaussian, gaussian_table, p_box

SCHEMES = ("ferrers", "extended", "hybrid")


@dataclass(frozen=True)
class GrassmannParams:
    n: int
    k: int
    q: int

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise OutOfRangeError(f"need 0 <= k <= n, got n={self.n}, k={self.k}")
        build_field(self.q)

    @classmethod
    def of(cls, x: Subspace) -> "GrassmannParams":
        return get_params(x.n, x.k, x.q)

    @property
    def box(self) -> int:
        return self.k * (self.n - self.k)

    @cached_property
    def alphas(self) -> Tuple[int, ...]:
        return alphas(self.n, self.k)

    @cached_property
    def total(self) -> int:
        return gaussian(self.n, self.k, self.q)

    @cached_property
    def gauss(self) -> List[List[int]]:
        return gaussian_table(self.n, self.k, self.q)

    @cached_property
    def blocks(self) -> Tuple[int, ...]:
        """blocks[m] = alpha_m * q^m, the number of subspaces with an m-dot diagram."""
        return tuple(a * self.q ** m for m, a in enumerate(self.alphas))

    @cached_property
    def above(self) -> Tuple[int, ...]:
        """above[m] = number of subspaces whose diagram has more than m dots."""
        out = [0] * (self.box + 1)
        for m in range(self.box - 1, -1, -1):
            out[m] = out[m + 1] + self.blocks[m + 1]
        return tuple(out)

    def check(self, x: Subspace) -> None:
        if (x.n, x.k, x.q) != (self.n, self.k, self.q):
            raise GrasscodeError(
                f"subspace lives in G_{x.q}({x.n},{x.k}), expected G_{self.q}({self.n},{self.k})"
            )

    def check_index(self, i: int) -> None:
        if not isinstance(i, int) or not 0 <= i < self.total:
            raise OutOfRangeError(f"index {i} outside 0..{self.total - 1}")


@lru_cache(maxsize=None)
def get_params(n: int, k: int, q: int) -> GrassmannParams:
    return GrassmannParams(n, k, q)


def _digits_msb(value: int, q: int, length: int) -> Tuple[int, ...]:
    out = [0] * length
    for pos in range(length - 1, -1, -1):
        value, out[pos] = divmod(value, q)
    return tuple(out)


def _sign(a, b) -> int:
    return (a > b) - (a < b)


# -- Ferrers tableaux order ---------------------------------------------------


def tableaux_key(x: Subspace) -> Tuple[int, int, Tuple[int, ...]]:
    t = tableaux_of_subspace(x)
    return (-t.diagram.size, ferrers_rank(t.diagram), t.entries)


def compare_tableaux(x: Subspace, y: Subspace) -> int:
    """-1, 0 or 1 under the Ferrers tableaux order."""
    GrassmannParams.of(x).check(y)
    return _sign(tableaux_key(x), tableaux_key(y))


def encode_ferrers(x: Subspace, params: GrassmannParams = None) -> int:
    params = params or GrassmannParams.of(x)
    params.check(x)
    t = tableaux_of_subspace(x)
    m = t.diagram.size
    return params.above[m] + ferrers_rank(t.diagram) * params.q ** m + column_value(t.entries, params.q)


def _ferrers_size_class(i: int, params: GrassmannParams) -> Tuple[int, int]:
    for s in range(params.box, -1, -1):
        if i < params.blocks[s]:
            return s, i
        i -= params.blocks[s]
    raise AssertionError("index passed the range check but fits no size class")  # pragma: no cover


def decode_ferrers(i: int, params: GrassmannParams) -> Subspace:
    params.check_index(i)
    n, k, q = params.n, params.k, params.q
    s, i = _ferrers_size_class(i, params)
    r, rem = divmod(i, q ** s)
    diagram = ferrers_unrank(s, r, k, n - k)
    return subspace_from_dots(diagram_to_vector(diagram, n, k), _digits_msb(rem, q, s), q)


def iter_ferrers(params: GrassmannParams, start: int = 0) -> Iterator[Subspace]:
    """Subspaces in Ferrers order from index ``start``; equals decode_ferrers(i) for each i."""
    if start >= params.total:
        return
    params.check_index(start)
    n, k, q = params.n, params.k, params.q
    s, offset = _ferrers_size_class(start, params)
    r0, rem0 = divmod(offset, q ** s)
    for size in range(s, -1, -1):
        for r in range(r0 if size == s else 0, params.alphas[size]):
            v = diagram_to_vector(ferrers_unrank(size, r, k, n - k), n, k)
            first = rem0 if (size == s and r == r0) else 0
            for rem in range(first, q ** size):
                yield subspace_from_dots(v, _digits_msb(rem, q, size), q)


# -- extended representation order --------------------------------------------


def extended_key(x: Subspace) -> Tuple[int, ...]:
    """Column values of EXT(X), rightmost column first."""
    v = identifying_vector(x)
    ext = (v,) + x.rows
    return tuple(column_value([r[c] for r in ext], x.q) for c in range(x.n - 1, -1, -1))


def compare_extended(x: Subspace, y: Subspace) -> int:
    GrassmannParams.of(x).check(y)
    return _sign(extended_key(x), extended_key(y))


def encode_extended(x: Subspace, params: GrassmannParams = None) -> int:
    params = params or GrassmannParams.of(x)
    params.check(x)
    n, k, q = params.n, params.k, params.q
    g = params.gauss
    v = identifying_vector(x)
    index = w = 0
    for j in range(1, n + 1):
        c = n - j
        if v[c]:
            index += q ** (k - w) * g[n - j][k - w]
            w += 1
        else:
            val, rest = divmod(column_value([r[c] for r in x.rows], q), q ** w)
            assert rest == 0, "non-pivot column has entries below a later pivot"
            index += val * g[n - j][k - w]
    return index


def decode_extended(i: int, params: GrassmannParams) -> Subspace:
    params.check_index(i)
    n, k, q = params.n, params.k, params.q
    g = params.gauss
    cols: List[Tuple[int, ...]] = []  # rightmost first
    w = 0
    for j in range(1, n + 1):
        if w >= k:
            cols.append((0,) * k)
            continue
        count = g[n - j][k - w]
        pivot_at = q ** (k - w) * count
        if i >= pivot_at:
            cols.append(_digits_msb(q ** w, q, k))
            i -= pivot_at
            w += 1
        else:
            val = i // count
            cols.append(_digits_msb(val * q ** w, q, k))
            i -= val * count
    rows = tuple(tuple(cols[n - 1 - c][r] for c in range(n)) for r in range(k))
    return Subspace._trusted(n, k, q, rows)


# -- hybrid ---------------------------------------------------------------------


@dataclass(frozen=True)
class HybridConfig:
    """Diagrams with at least ``threshold`` dots form the Ferrers-encoded family."""

    params: GrassmannParams
    threshold: int

    def __post_init__(self):
        if not 0 <= self.threshold <= self.params.box + 1:
            raise OutOfRangeError(f"threshold {self.threshold} outside 0..{self.params.box + 1}")

    @classmethod
    def default(cls, params: GrassmannParams, share: float = 0.9) -> "HybridConfig":
        """Largest threshold whose Ferrers block still holds ``share`` of the space."""
        frac = Fraction(share).limit_denominator(10 ** 6)
        cum = 0
        for t in range(params.box, -1, -1):
            cum += params.blocks[t]
            if cum * frac.denominator >= frac.numerator * params.total:
                return cls(params, t)
        return cls(params, 0)

    @cached_property
    def block(self) -> int:
        return sum(self.params.blocks[self.threshold:])

    def contains(self, x: Subspace) -> bool:
        return tableaux_of_subspace(x).diagram.size >= self.threshold

    def non_sf_completions(self, j: int, w: int, dots: int) -> int:
        """Subspaces outside the family that agree with a fixed right prefix of j columns.

        ``w`` pivots and ``dots`` diagram dots are already placed in that prefix.
        """
        n, k, q = self.params.n, self.params.k, self.params.q
        height, width = k - w, (n - j) - (k - w)
        if width < 0:
            return 0
        limit = min(self.threshold - dots, height * width + 1)
        return sum(p_box(e, height, width) * q ** e for e in range(max(limit, 0)))

    def sf_completions(self, j: int, w: int, dots: int) -> int:
        """Family members that agree with a fixed right prefix (see ``non_sf_completions``)."""
        n, k = self.params.n, self.params.k
        if w > k:
            return 0
        return self.params.gauss[n - j][k - w] - self.non_sf_completions(j, w, dots)


def delta_count(x: Subspace, cfg: HybridConfig) -> int:
    """Number of family members that follow x in extended order (x outside the family)."""
    params = cfg.params
    params.check(x)
    if cfg.contains(x):
        raise GrasscodeError("delta_count needs a subspace outside the Ferrers-encoded family")
    k, q = params.k, params.q
    top = q ** k
    count = w = dots = 0
    for j, cx in enumerate(extended_key(x), start=1):
        if w >= k:
            break
        if cx >= top:
            # a pivot column is the largest value a column can take here
            w += 1
            continue
        val = cx // q ** w
        count += (q ** (k - w) - val - 1) * cfg.sf_completions(j, w, dots + k - w)
        count += cfg.sf_completions(j, w + 1, dots)
        dots += k - w
    return count


def encode_hybrid(x: Subspace, cfg: HybridConfig) -> int:
    cfg.params.check(x)
    if cfg.contains(x):
        return encode_ferrers(x, cfg.params)
    return encode_extended(x, cfg.params) + delta_count(x, cfg)


def decode_hybrid(i: int, cfg: HybridConfig) -> Subspace:
    params = cfg.params
    params.check_index(i)
    if i < cfg.block:
        return decode_ferrers(i, params)
    n, k, q = params.n, params.k, params.q
    r = i - cfg.block
    cols: List[Tuple[int, ...]] = []
    w = dots = 0
    for j in range(1, n + 1):
        if w >= k:
            cols.append((0,) * k)
            continue
        per_value = cfg.non_sf_completions(j, w, dots + k - w)
        nonpivot_total = q ** (k - w) * per_value
        if r < nonpivot_total:
            val, r = divmod(r, per_value)
            cols.append(_digits_msb(val * q ** w, q, k))
            dots += k - w
        else:
            r -= nonpivot_total
            cols.append(_digits_msb(q ** w, q, k))
            w += 1
    rows = tuple(tuple(cols[n - 1 - c][row] for c in range(n)) for row in range(k))
    return Subspace._trusted(n, k, q, rows)


# -- dispatch -------------------------------------------------------------------


def encode(x: Subspace, scheme: str, threshold: int = None) -> int:
    params = GrassmannParams.of(x)
    if scheme == "ferrers":
        return encode_ferrers(x, params)
    if scheme == "extended":
        return encode_extended(x, params)
    if scheme == "hybrid":
        return encode_hybrid(x, _hybrid_config(params, threshold))
    raise GrasscodeError(f"unknown scheme {scheme!r}")


def decode(i: int, params: GrassmannParams, scheme: str, threshold: int = None) -> Subspace:
    if scheme == "ferrers":
        return decode_ferrers(i, params)
    if scheme == "extended":
        return decode_extended(i, params)
    if scheme == "hybrid":
        return decode_hybrid(i, _hybrid_config(params, threshold))
    raise GrasscodeError(f"unknown scheme {scheme!r}")


def _hybrid_config(params: GrassmannParams, threshold: int = None) -> HybridConfig:
    if threshold is None:
        return HybridConfig.default(params)
    return HybridConfig(params, threshold)


def iter_order(params: GrassmannParams, scheme: str, start: int = 0, threshold: int = None) -> Iterator[Subspace]:
    """All subspaces from index ``start`` in the scheme's order."""
    if scheme == "ferrers":
        yield from iter_ferrers(params, start)
        return
    cfg = _hybrid_config(params, threshold) if scheme == "hybrid" else None
    for i in range(start, params.total):
        yield decode_hybrid(i, cfg) if cfg else decode(i, params, scheme)


def index_order_key(scheme: str):
    """Sort key realizing a scheme's order directly, without computing indices."""
    if scheme == "ferrers":
        return tableaux_key
    if scheme == "extended":
        return extended_key
    raise GrasscodeError(f"no direct comparator for scheme {scheme!r}")


def all_subspaces(n: int, k: int, q: int) -> Iterator[Subspace]:
    """Every subspace of G_q(n, k), by filling each echelon Ferrers form."""
    for f in all_diagrams(k, n - k):
        v = diagram_to_vector(f, n, k)
        for rem in range(q ** f.size):
            yield subspace_from_dots(v, _digits_msb(rem, q, f.size), q)
