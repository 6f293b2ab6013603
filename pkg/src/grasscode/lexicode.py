"""Greedy lexicodes in G_q(n, k) under the subspace distance.

Subspaces are visited in the index order of one of the enumerative
encodings and accepted whenever their distance to every codeword accepted
so far is at least ``d``. For q = 2 and n <= 64 the distance test runs on
bit-packed rows through ``grasscode.kernels``.
"""

from __future__ import annotations

import logging
import os
from array import array
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

from . import kernels
from .encoders import SCHEMES, GrassmannParams, HybridConfig, get_params, iter_order
from .errors import GrasscodeError
from .linalg import Subspace, subspace_distance

log = logging.getLogger(__name__)

# below this many codewords a thread fan-out costs more than it saves
_PARALLEL_MIN = 4096


@dataclass
class CodeBuild:
    params: GrassmannParams
    d: int
    order: str
    codewords: List[Subspace] = field(default_factory=list)
    next_index: int = 0
    threshold: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.codewords)

    @property
    def complete(self) -> bool:
        return self.next_index >= self.params.total


def _check_d(params: GrassmannParams, d: int) -> None:
    if d % 2 or not 2 <= d <= 2 * params.k:
        raise GrasscodeError(f"minimum distance must be even with 2 <= d <= 2k = {2 * params.k}, got {d}")


def _thread_count() -> int:
    try:
        return max(1, int(os.environ.get("GRASSCODE_THREADS", "1")))
    except ValueError:
        return 1


class _PackedCode:
    """Codewords as back-to-back uint64 row masks, for the GF(2) kernel."""

    def __init__(self, k: int, need: int, threads: int):
        self.k, self.need = k, need
        self.data = array("Q")
        self.count = 0
        self.pool = ThreadPoolExecutor(threads) if threads > 1 else None
        self.threads = threads

    def compatible(self, masks: Sequence[int]) -> bool:
        cand = array("Q", masks)
        if self.pool is None or self.count < _PARALLEL_MIN:
            return kernels.first_conflict(self.data, cand, self.k, self.need) < 0
        step = -(-self.count // self.threads)
        view = memoryview(self.data)
        jobs = [
            self.pool.submit(kernels.first_conflict, view, cand, self.k, self.need, lo, lo + step)
            for lo in range(0, self.count, step)
        ]
        return all(j.result() < 0 for j in jobs)

    def add(self, masks: Sequence[int]) -> None:
        self.data.extend(masks)
        self.count += 1

    def close(self) -> None:
        if self.pool is not None:
            self.pool.shutdown()


def build_lexicode(
    params: GrassmannParams,
    d: int,
    order: str = "ferrers",
    index_limit: Optional[int] = None,
    threshold: Optional[int] = None,
    resume: Optional[CodeBuild] = None,
    checkpoint: Optional[Path] = None,
    checkpoint_every: int = 50000,
    progress: Optional[Callable[[CodeBuild], None]] = None,
) -> CodeBuild:
    """Greedy code over indices ``next_index .. index_limit - 1`` in the given order.

    ``resume`` continues a previous (possibly checkpointed) build; the result
    is the same as an uninterrupted run. Acceptance is strictly sequential.
    """
    if order not in SCHEMES:
        raise GrasscodeError(f"unknown order {order!r}")
    _check_d(params, d)
    if order == "hybrid" and threshold is None:
        threshold = HybridConfig.default(params).threshold
    if resume is not None:
        if (resume.params, resume.d, resume.order, resume.threshold) != (params, d, order, threshold):
            raise GrasscodeError("checkpoint was made with different parameters")
        build = CodeBuild(params, d, order, list(resume.codewords), resume.next_index, threshold)
    else:
        build = CodeBuild(params, d, order, threshold=threshold)
    stop = params.total if index_limit is None else min(index_limit, params.total)

    need = params.k + d // 2
    packed = None
    if params.q == 2 and params.n <= 64:
        packed = _PackedCode(params.k, need, _thread_count())
        for cw in build.codewords:
            packed.add(cw.bitmasks())

    try:
        index = build.next_index
        for x in iter_order(params, order, build.next_index, threshold):
            if index >= stop:
                break
            if packed is not None:
                masks = x.bitmasks()
                ok = packed.compatible(masks)
                if ok:
                    packed.add(masks)
            else:
                ok = all(subspace_distance(x, c) >= d for c in build.codewords)
            if ok:
                build.codewords.append(x)
            index += 1
            if index % checkpoint_every == 0:
                build.next_index = index
                if checkpoint is not None:
                    save_checkpoint(build, checkpoint)
                if progress is not None:
                    progress(build)
                log.debug("lexicode: index %d, %d codewords", index, build.size)
        build.next_index = max(index, build.next_index)
    finally:
        if packed is not None:
            packed.close()
    if checkpoint is not None:
        save_checkpoint(build, checkpoint)
    return build


def verify_min_distance(code: Sequence[Subspace], d: int) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """(True, None) if every pair is at distance >= d, else (False, (i, j)).

    The witness is the violating pair with the smallest j, then smallest i < j.
    """
    if not code:
        raise GrasscodeError("empty code")
    x0 = code[0]
    if x0.q == 2 and x0.n <= 64 and all((c.n, c.k, c.q) == (x0.n, x0.k, 2) for c in code):
        k = x0.k
        data = array("Q")
        for j, y in enumerate(code):
            masks = y.bitmasks()
            i = kernels.first_conflict(data, array("Q", masks), k, k + -(-d // 2)) if k else -1
            if i >= 0:
                return False, (i, j)
            data.extend(masks)
        if k == 0 and len(code) > 1 and d > 0:
            return False, (0, 1)
        return True, None
    for j in range(1, len(code)):
        for i in range(j):
            if subspace_distance(code[i], code[j]) < d:
                return False, (i, j)
    return True, None


# -- checkpoint files -----------------------------------------------------------
#
# line 1:  n k q d order next_index count [threshold]
# then one codeword per line: RREF rows separated by ';', entries by spaces.


def format_codeword(x: Subspace) -> str:
    return ";".join(" ".join(map(str, r)) for r in x.rows)


def parse_codeword(line: str, n: int, k: int, q: int) -> Subspace:
    rows = [tuple(int(a) for a in part.split()) for part in line.split(";")] if k else []
    x = Subspace.from_generators(rows, q, n)
    if x.k != k:
        raise GrasscodeError(f"codeword {line!r} has dimension {x.k}, expected {k}")
    return x


def save_checkpoint(build: CodeBuild, path) -> None:
    p = build.params
    header = [p.n, p.k, p.q, build.d, build.order, build.next_index, build.size]
    if build.threshold is not None:
        header.append(build.threshold)
    lines = [" ".join(map(str, header))] + [format_codeword(c) for c in build.codewords]
    tmp = Path(str(path) + ".tmp")
    tmp.write_text("\n".join(lines) + "\n")
    os.replace(tmp, path)


def load_checkpoint(path) -> CodeBuild:
    lines = Path(path).read_text().splitlines()
    if not lines:
        raise GrasscodeError(f"{path}: empty checkpoint")
    head = lines[0].split()
    if len(head) not in (7, 8):
        raise GrasscodeError(f"{path}: malformed header {lines[0]!r}")
    try:
        n, k, q, d = (int(a) for a in head[:4])
        order = head[4]
        next_index, count = int(head[5]), int(head[6])
        threshold = int(head[7]) if len(head) == 8 else None
    except ValueError as exc:
        raise GrasscodeError(f"{path}: malformed header {lines[0]!r}") from exc
    params = get_params(n, k, q)
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != count:
        raise GrasscodeError(f"{path}: header announces {count} codewords, found {len(body)}")
    codewords = [parse_codeword(ln, n, k, q) for ln in body]
    return CodeBuild(params, d, order, codewords, next_index, threshold)
