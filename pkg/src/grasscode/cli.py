"""Command-line interface.

Exit status: 0 on success, 1 for malformed input, 2 for an out-of-range
index or parameter. Diagnostics go to stderr. Every command accepts
``--json``; indices are always decimal strings in JSON output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from .encoders import SCHEMES, HybridConfig, decode, encode, get_params
from .errors import GrasscodeError, OutOfRangeError
from .lexicode import build_lexicode, load_checkpoint, verify_min_distance
from .linalg import Subspace, subspace_distance, tableaux_of_subspace
from .shapes import alphas, gaussian, p_box
from .textio import format_annotated, format_subspace, parse_subspaces


def _read_input(path: Optional[str]) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise GrasscodeError(f"cannot read {path}: {exc}") from exc


def _one_subspace(args) -> Subspace:
    subs = parse_subspaces(_read_input(args.input))
    if len(subs) != 1:
        raise GrasscodeError(f"expected exactly one subspace, found {len(subs)}")
    return subs[0]


def _subspace_json(x: Subspace) -> dict:
    return {"n": x.n, "k": x.k, "q": x.q, "rref": [list(r) for r in x.rows]}


def _emit(args, text: str, obj: dict) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _parse_index(s: str) -> int:
    s = s.strip()
    if not s.isdigit():
        raise GrasscodeError(f"index must be a nonnegative decimal integer, got {s!r}")
    return int(s)


def cmd_canonicalize(args) -> None:
    x = _one_subspace(args)
    t = tableaux_of_subspace(x)
    obj = _subspace_json(x)
    obj.update(
        idvec=list(x.idvec),
        diagram=list(t.diagram.cols),
        tableaux=[list(r) for r in t.display_rows()],
        entries=list(t.entries),
    )
    _emit(args, format_annotated(x), obj)


def _threshold_cfg(params, threshold):
    return HybridConfig(params, threshold) if threshold is not None else HybridConfig.default(params)


def cmd_encode(args) -> None:
    x = _one_subspace(args)
    params = get_params(x.n, x.k, x.q)
    threshold = _threshold_cfg(params, args.threshold).threshold if args.scheme == "hybrid" else None
    i = encode(x, args.scheme, threshold)
    obj = {"scheme": args.scheme, "index": str(i), "n": x.n, "k": x.k, "q": x.q}
    if threshold is not None:
        obj["threshold"] = threshold
    _emit(args, str(i), obj)


def cmd_decode(args) -> None:
    params = get_params(args.n, args.k, args.q)
    i = _parse_index(args.index)
    threshold = _threshold_cfg(params, args.threshold).threshold if args.scheme == "hybrid" else None
    x = decode(i, params, args.scheme, threshold)
    obj = _subspace_json(x)
    obj.update(scheme=args.scheme, index=str(i))
    _emit(args, format_subspace(x), obj)


def cmd_distance(args) -> None:
    subs = parse_subspaces(_read_input(args.input))
    if len(subs) != 2:
        raise GrasscodeError(f"expected two subspaces, found {len(subs)}")
    d = subspace_distance(*subs)
    _emit(args, str(d), {"distance": d})


def cmd_count(args) -> None:
    lines, obj = [], {}
    if args.gaussian:
        n, k, q = args.gaussian
        get_params(n, k, q)
        g = gaussian(n, k, q)
        lines.append(str(g))
        obj["gaussian"] = str(g)
    if args.alpha:
        n, k = args.alpha
        if not 0 <= k <= n:
            raise OutOfRangeError(f"need 0 <= k <= n, got n={n}, k={k}")
        table = alphas(n, k)
        lines.extend(f"{ell} {a}" for ell, a in enumerate(table))
        obj["alpha"] = [str(a) for a in table]
    if args.pbox:
        m, k, eta = args.pbox
        v = p_box(m, k, eta)
        lines.append(str(v))
        obj["p_box"] = str(v)
    if not lines:
        raise GrasscodeError("count needs --gaussian, --alpha or --pbox")
    _emit(args, "\n".join(lines), obj)


def cmd_lexicode(args) -> None:
    params = get_params(args.n, args.k, args.q)
    threshold = args.threshold
    if args.order == "hybrid" and threshold is None:
        threshold = HybridConfig.default(params).threshold
    elif args.order == "hybrid":
        HybridConfig(params, threshold)
    resume = None
    if args.checkpoint and args.resume and Path(args.checkpoint).exists():
        resume = load_checkpoint(args.checkpoint)
    limit = _parse_index(args.limit) if args.limit is not None else None
    build = build_lexicode(
        params, args.d, args.order, index_limit=limit, threshold=threshold,
        resume=resume, checkpoint=args.checkpoint,
    )
    ok, witness = verify_min_distance(build.codewords, args.d) if args.verify and build.codewords else (None, None)
    obj = {
        "n": params.n, "k": params.k, "q": params.q, "d": args.d, "order": args.order,
        "size": build.size, "next_index": str(build.next_index), "complete": build.complete,
    }
    if threshold is not None:
        obj["threshold"] = threshold
    if ok is not None:
        obj["verified"] = ok
    text = [f"size {build.size}", f"next_index {build.next_index}", f"complete {str(build.complete).lower()}"]
    if ok is not None:
        text.append(f"verified {str(ok).lower()}" + ("" if ok else f" (pair {witness})"))
    _emit(args, "\n".join(text), obj)


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    def report(r):
        if not args.json:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status}  {r.name:<34} {r.seconds:7.2f}s  {r.detail}", flush=True)

    results = run_selftest(report)
    if args.json:
        print(json.dumps({"results": [r.__dict__ for r in results]}, sort_keys=True))
    return 0 if all(r.passed for r in results) else 1


def cmd_bench(args) -> None:
    from .bench import format_report, run_bench

    rep = run_bench(quick=args.quick)
    obj = {
        "rows": [dict(r.__dict__, work=r.work) for r in rep.rows],
        "slopes": rep.slopes,
        "kernel_us": rep.kernel,
    }
    _emit(args, format_report(rep), obj)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grasscode", description=__doc__.split("\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("--input", "-i", help="subspace text file (default: stdin)")
        return p

    def with_params(p):
        p.add_argument("-n", type=int, required=True)
        p.add_argument("-k", type=int, required=True)
        p.add_argument("-q", type=int, default=2)
        return p

    p = with_input(sub.add_parser("canonicalize", parents=[common], help="print RREF, identifying vector, tableaux"))
    p.set_defaults(func=cmd_canonicalize)

    p = with_input(sub.add_parser("encode", parents=[common], help="print the index of a subspace"))
    p.add_argument("--scheme", choices=SCHEMES, default="extended")
    p.add_argument("--threshold", type=int)
    p.set_defaults(func=cmd_encode)

    p = with_params(sub.add_parser("decode", parents=[common], help="print the subspace with a given index"))
    p.add_argument("--scheme", choices=SCHEMES, default="extended")
    p.add_argument("--index", required=True)
    p.add_argument("--threshold", type=int)
    p.set_defaults(func=cmd_decode)

    p = with_input(sub.add_parser("distance", parents=[common], help="subspace distance of two subspaces"))
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("count", parents=[common], help="Gaussian coefficients and partition counts")
    p.add_argument("--gaussian", nargs=3, type=int, metavar=("N", "K", "Q"))
    p.add_argument("--alpha", nargs=2, type=int, metavar=("N", "K"))
    p.add_argument("--pbox", nargs=3, type=int, metavar=("M", "K", "ETA"))
    p.set_defaults(func=cmd_count)

    p = with_params(sub.add_parser("lexicode", parents=[common], help="greedy lexicode construction"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--order", choices=SCHEMES, default="ferrers")
    p.add_argument("--limit", help="only visit indices below this bound")
    p.add_argument("--threshold", type=int)
    p.add_argument("--checkpoint", help="checkpoint file, rewritten as the search advances")
    p.add_argument("--resume", action="store_true", help="continue from --checkpoint if it exists")
    p.add_argument("--no-verify", dest="verify", action="store_false", help="skip the pairwise distance check")
    p.set_defaults(func=cmd_lexicode)

    p = sub.add_parser("selftest", parents=[common], help="run the exhaustive desk-scale checks")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", parents=[common], help="timing tables for encode/decode and the kernels")
    p.add_argument("--quick", action="store_true")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; those are malformed input here
        return 0 if exc.code == 0 else 1
    try:
        rc = args.func(args)
    except OutOfRangeError as exc:
        print(f"grasscode: {exc}", file=sys.stderr)
        return 2
    except (GrasscodeError, ZeroDivisionError) as exc:
        print(f"grasscode: {exc}", file=sys.stderr)
        return 1
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
