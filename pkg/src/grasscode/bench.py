"""Timing tables: encode/decode scaling per scheme, and compiled vs pure-Python kernels."""

from __future__ import annotations

import math
import random
import statistics
import time
from array import array
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from . import kernels
from .encoders import GrassmannParams, decode, encode, encode_extended, get_params

# n * k * (n - k) roughly doubles from one entry to the next
SCALING_GRID: List[Tuple[int, int]] = [
    (8, 4), (10, 5), (13, 6), (16, 8), (20, 10), (26, 13), (32, 16), (40, 20), (50, 25), (64, 32),
]
QUICK_GRID = SCALING_GRID[:6]


@dataclass
class ScalingRow:
    n: int
    k: int
    scheme: str
    encode_us: float
    decode_us: float
    cold_encode_us: float = float("nan")

    @property
    def work(self) -> int:
        return self.n * self.k * (self.n - self.k)


@dataclass
class BenchReport:
    rows: List[ScalingRow] = field(default_factory=list)
    slopes: Dict[str, float] = field(default_factory=dict)
    kernel: Dict[str, float] = field(default_factory=dict)


def _time_per_call(fn, args_list) -> float:
    t0 = time.perf_counter()
    for args in args_list:
        fn(*args)
    return (time.perf_counter() - t0) / len(args_list) * 1e6


def loglog_slope(xs, ys) -> float:
    return statistics.linear_regression([math.log(x) for x in xs], [math.log(y) for y in ys]).slope


def scaling(grid=SCALING_GRID, schemes=("extended", "ferrers", "hybrid"), q: int = 2, samples: int = 200, seed: int = 0):
    """Mean encode/decode time per call over random subspaces, tables warmed first."""
    rng = random.Random(seed)
    rows = []
    for n, k in grid:
        params = get_params(n, k, q)
        indices = [rng.randrange(params.total) for _ in range(samples)]
        for scheme in schemes:
            subs = [decode(i, params, scheme) for i in indices]  # also warms caches
            enc = _time_per_call(encode, [(x, scheme) for x in subs])
            dec = _time_per_call(decode, [(i, params, scheme) for i in indices])
            row = ScalingRow(n, k, scheme, enc, dec)
            if scheme == "extended":
                # fresh parameter object, so the Gaussian table is rebuilt inside the timing
                few = subs[: max(1, samples // 10)]
                row.cold_encode_us = _time_per_call(
                    lambda x: encode_extended(x, GrassmannParams(n, k, q)), [(x,) for x in few]
                )
            rows.append(row)
    slopes = {}
    for scheme in schemes:
        sel = [r for r in rows if r.scheme == scheme]
        slopes[f"{scheme} encode"] = loglog_slope([r.work for r in sel], [r.encode_us for r in sel])
        slopes[f"{scheme} decode"] = loglog_slope([r.work for r in sel], [r.decode_us for r in sel])
        if scheme == "extended":
            slopes["extended cold encode"] = loglog_slope([r.work for r in sel], [r.cold_encode_us for r in sel])
    return rows, slopes


def kernel_comparison(n: int = 8, k: int = 4, codewords: int = 2000, candidates: int = 200, seed: int = 0):
    """Microseconds per candidate check against a random RREF code, per backend."""
    rng = random.Random(seed)
    params = get_params(n, k, 2)

    def random_masks():
        return decode(rng.randrange(params.total), params, "extended").bitmasks()

    code = array("Q")
    for _ in range(codewords):
        code.extend(random_masks())
    cands = [array("Q", random_masks()) for _ in range(candidates)]
    # rank(stack) >= k always, so need = k never conflicts and every codeword is visited
    need = k
    out = {}
    for name, impl in kernels.backends().items():
        out[name] = _time_per_call(lambda c: impl.first_conflict(code, c, k, need), [(c,) for c in cands])
    return out


def run_bench(quick: bool = False) -> BenchReport:
    grid = QUICK_GRID if quick else SCALING_GRID
    rows, slopes = scaling(grid, samples=50 if quick else 200)
    kernel = kernel_comparison(codewords=500 if quick else 2000, candidates=50 if quick else 200)
    return BenchReport(rows, slopes, kernel)


def format_report(rep: BenchReport) -> str:
    lines = [f"{'n':>3} {'k':>3} {'nk(n-k)':>8} {'scheme':>9} {'encode us':>10} {'decode us':>10} {'cold enc us':>12}"]
    for r in rep.rows:
        cold = "" if math.isnan(r.cold_encode_us) else f"{r.cold_encode_us:12.1f}"
        lines.append(f"{r.n:>3} {r.k:>3} {r.work:>8} {r.scheme:>9} {r.encode_us:>10.1f} {r.decode_us:>10.1f} {cold}")
    lines.append("")
    lines.append("log-log slope against n*k*(n-k):")
    for name, s in rep.slopes.items():
        mark = "within" if abs(s - 1) <= 0.35 else "outside"
        lines.append(f"  {name:<22} {s:6.3f}  ({mark} 1 +/- 0.35)")
    lines.append("")
    lines.append("GF(2) conflict kernel, us per candidate:")
    for name, us in rep.kernel.items():
        lines.append(f"  {name:<8} {us:10.1f}")
    if "cython" in rep.kernel:
        lines.append(f"  speedup  {rep.kernel['python'] / rep.kernel['cython']:10.1f}x")
    lines.append(f"active backend: {kernels.BACKEND}")
    return "\n".join(lines)

