"""Exhaustive desk-scale consistency checks, runnable from the command line."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, List

from .encoders import (
    HybridConfig,
    all_subspaces,
    decode,
    decode_hybrid,
    delta_count,
    encode,
    encode_hybrid,
    extended_key,
    get_params,
    tableaux_key,
)
from .field import build_field
from .lexicode import build_lexicode
from .linalg import subspace_distance
from .shapes import gaussian, gaussian_product, p_box

BIJECTION_PARAMS = [(4, 2, 2), (5, 2, 2), (5, 3, 2), (6, 3, 2), (4, 2, 3)]


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float
    detail: str = ""


def _field_axioms():
    for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16):
        f = build_field(q)
        els = range(q)
        for a in els:
            assert f.add(a, 0) == a and f.mul(a, 1) == a
            assert f.pow(a, q) == a
            if a:
                assert f.mul(a, f.inv(a)) == 1
            for b in els:
                assert f.add(a, b) == f.add(b, a) and f.mul(a, b) == f.mul(b, a)
                for c in els:
                    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
                    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    return "q in {2,...,16}"


def _partition_identity():
    for q in (2, 3, 4):
        for n in range(13):
            for k in range(n + 1):
                assert gaussian(n, k, q) == gaussian_product(n, k, q)
    assert p_box(21, 21, 21) == 792
    return "n <= 12, q in {2,3,4}"


def _bijections():
    for n, k, q in BIJECTION_PARAMS:
        params = get_params(n, k, q)
        subs = list(all_subspaces(n, k, q))
        assert len(subs) == params.total
        for scheme, key in (("ferrers", tableaux_key), ("extended", extended_key), ("hybrid", None)):
            idx = [encode(x, scheme) for x in subs]
            assert sorted(idx) == list(range(params.total)), (n, k, q, scheme)
            for x, i in zip(subs, idx):
                assert decode(i, params, scheme) == x
            if key is not None:
                by_key = sorted(subs, key=key)
                assert [encode(x, scheme) for x in by_key] == list(range(params.total))
    return ", ".join(f"G_{q}({n},{k})" for n, k, q in BIJECTION_PARAMS)


def _hybrid():
    params = get_params(5, 2, 2)
    subs = list(all_subspaces(5, 2, 2))
    keys = {x: extended_key(x) for x in subs}
    for t in range(params.box + 2):
        cfg = HybridConfig(params, t)
        assert sorted(encode_hybrid(x, cfg) for x in subs) == list(range(params.total))
        assert all(decode_hybrid(encode_hybrid(x, cfg), cfg) == x for x in subs)
        family = [y for y in subs if cfg.contains(y)]
        for x in subs:
            if not cfg.contains(x):
                assert delta_count(x, cfg) == sum(keys[y] > keys[x] for y in family)
    return "G_2(5,2), thresholds 0..7"


def _lexicode():
    params = get_params(4, 2, 2)
    subs = list(all_subspaces(4, 2, 2))
    for order, key in (("ferrers", tableaux_key), ("extended", extended_key)):
        build = build_lexicode(params, 4, order)
        greedy = []
        for x in sorted(subs, key=key):
            if all(subspace_distance(x, c) >= 4 for c in greedy):
                greedy.append(x)
        assert build.codewords == greedy
    return "G_2(4,2), d = 4"


CHECKS: List[tuple] = [
    ("field axioms", _field_axioms),
    ("partition sum = product formula", _partition_identity),
    ("bijection suites", _bijections),
    ("hybrid consistency", _hybrid),
    ("lexicode greedy oracle", _lexicode),
]


def run_selftest(report: Callable[[CheckResult], None] = None) -> List[CheckResult]:
    results = []
    for name, fn in CHECKS:
        t0 = time.perf_counter()
        try:
            detail, ok = fn(), True
        except AssertionError as exc:
            detail, ok = f"failed: {exc!r}", False
        res = CheckResult(name, ok, time.perf_counter() - t0, detail)
        results.append(res)
        if report is not None:
            report(res)
    return results
