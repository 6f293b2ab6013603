"""Plain-text subspace format.

A subspace is written as a header line ``n k q`` followed by k lines of n
whitespace-separated field elements (any generator matrix). Blank lines and
lines starting with ``#`` are ignored, so annotated output can be read back.
"""

from __future__ import annotations

from typing import Iterator, List, TextIO

from .errors import GrasscodeError
from .field import build_field
from .linalg import Subspace, tableaux_of_subspace


def _content_lines(text: str) -> Iterator[List[str]]:
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield line.split()


def _ints(tokens: List[str]) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise GrasscodeError(f"expected integers, got {' '.join(tokens)!r}") from exc


def parse_subspaces(text: str) -> List[Subspace]:
    """Every subspace block in ``text``, canonicalized."""
    lines = list(_content_lines(text))
    out = []
    pos = 0
    while pos < len(lines):
        head = _ints(lines[pos])
        if len(head) != 3:
            raise GrasscodeError(f"header must be 'n k q', got {' '.join(lines[pos])!r}")
        n, k, q = head
        if n < 0 or not 0 <= k <= n:
            raise GrasscodeError(f"invalid dimensions n={n}, k={k}")
        rows = [_ints(tokens) for tokens in lines[pos + 1:pos + 1 + k]]
        if len(rows) != k:
            raise GrasscodeError(f"expected {k} matrix rows, found {len(rows)}")
        build_field(q)
        for r in rows:
            if len(r) != n:
                raise GrasscodeError(f"row {r} has {len(r)} entries, expected {n}")
            if any(not 0 <= a < q for a in r):
                raise GrasscodeError(f"row {r} has entries outside 0..{q - 1}")
        x = Subspace.from_generators(rows, q, n)
        if x.k != k:
            raise GrasscodeError(f"generator rows have rank {x.k}, expected {k}")
        out.append(x)
        pos += 1 + k
    return out


def read_subspace(stream: TextIO) -> Subspace:
    subs = parse_subspaces(stream.read())
    if len(subs) != 1:
        raise GrasscodeError(f"expected one subspace, found {len(subs)}")
    return subs[0]


def format_subspace(x: Subspace) -> str:
    lines = [f"{x.n} {x.k} {x.q}"] + [" ".join(map(str, r)) for r in x.rows]
    return "\n".join(lines) + "\n"


def format_annotated(x: Subspace) -> str:
    """Canonical form plus identifying vector and tableaux as comment lines."""
    t = tableaux_of_subspace(x)
    rows = " / ".join(" ".join(map(str, r)) for r in t.display_rows())
    return (
        format_subspace(x)
        + f"# idvec {''.join(map(str, x.idvec))}\n"
        + f"# diagram {' '.join(map(str, t.diagram.cols))}\n"
        + f"# tableaux {rows}\n"
    )
