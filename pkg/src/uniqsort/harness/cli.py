"""Command-line interface: ``uniqsort <command> ...`` or ``python -m uniqsort``."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Any, Iterable, Optional, Sequence

from .. import bijections as bj
from .. import dyck, noncross
from ..perm_core import (
    PreconditionError,
    ResourceLimitError,
    enumerate_avoiders,
    format_perm,
    parse_patterns,
    parse_perm,
)
from ..sliding import OPS, slide, slide_indexed
from ..stacksort import (
    canonical_hooks,
    deficiency,
    enumerate_uniquely_sorted,
    fertility,
    stack_sort,
    stack_sort_recursive,
)
from . import formulas, sequences, verify

FIELDS = ("input", "operation", "output", "k", "count")
BIJECTIONS = (
    "dl",
    "matrix",
    "tamari",
    "upsilon",
    "upsilon_direct",
    "pallo",
    "parking",
    *bj.ANTICHAIN_MAPS,
)


def record(inp: Any, op: str, out: Any = None, k: Optional[int] = None, count: Optional[int] = None) -> dict:
    return {"input": inp, "operation": op, "output": out, "k": k, "count": count}


def emit(records: Iterable[dict], fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    records = list(records)
    if fmt == "json":
        for r in records:
            stream.write(json.dumps(r) + "\n")
    elif fmt == "csv":
        w = csv.DictWriter(stream, fieldnames=FIELDS)
        w.writeheader()
        for r in records:
            w.writerow({f: "" if r[f] is None else r[f] for f in FIELDS})
    else:
        for r in records:
            if r["output"] is not None:
                stream.write(f"{r['output']}\n")
            else:
                stream.write(f"{r['count']}\n")


def _hooks_text(hooks) -> str:
    if hooks is None:
        return "none"
    return " ".join(f"({h.sw + 1},{h.ne + 1})" for h in hooks)


def _path_pair(text: str) -> tuple[str, str]:
    if ";" not in text:
        raise PreconditionError(f"expected 'lower;upper', got {text!r}")
    lo, hi = text.split(";")
    return dyck.dyck(lo), dyck.dyck(hi)


def _matrix_text(m) -> str:
    return "/".join(",".join(str(x) for x in row) for row in m)


def _run_bijection(name: str, text: str, inverse: bool) -> tuple[str, Optional[int]]:
    if name in ("dl", "tamari"):
        if inverse:
            lo, hi = _path_pair(text)
            f = bj.dl_inverse if name == "dl" else bj.tamari_inverse
            return format_perm(f((lo, hi))), len(lo) // 2
        p = parse_perm(text)
        iv = bj.dl_forward(p) if name == "dl" else bj.tamari_forward(p)
        return str(iv), len(p) // 2
    if name == "matrix":
        if inverse:
            rows = [[int(x) for x in r.split(",")] for r in text.split("/")]
            p = bj.perm_from_matrix(tuple(tuple(r) for r in rows))
            return format_perm(p), len(rows)
        p = parse_perm(text)
        return _matrix_text(bj.cell_matrix(p)), len(p) // 2
    if name in ("upsilon", "upsilon_direct"):
        if inverse:
            if name != "upsilon":
                raise PreconditionError("only the tree form has an inverse")
            iv = noncross.parse_nc_interval(text)
            return format_perm(bj.upsilon_tree_inverse(iv)), noncross.size(iv.kappa)
        p = parse_perm(text)
        f = bj.upsilon_tree if name == "upsilon" else bj.upsilon_direct
        return str(f(p)), len(p) // 2
    if name == "pallo":
        if inverse:
            nice, first, second = text.split(":")
            parts = bj.PalloParts(nice == "nice", parse_perm(first), parse_perm(second))
            p = bj.pallo_recompose(parts)
            return format_perm(p), len(p) // 2
        p = parse_perm(text)
        parts = bj.pallo_decompose(p)
        tag = "nice" if parts.nice else "split"
        return f"{tag}:{format_perm(parts.first)}:{format_perm(parts.second)}", len(p) // 2
    if name == "parking":
        if inverse:
            a = [int(x) for x in text.split(",")]
            return format_perm(bj.parking_inverse(a)), len(a)
        p = parse_perm(text)
        return ",".join(map(str, bj.parking_bijection(p))), len(p) // 2
    if name in bj.ANTICHAIN_MAPS:
        if inverse:
            raise PreconditionError(f"{name} has no inverse command")
        p = parse_perm(text)
        return str(bj.antichain_map(p, name)), len(p) // 2
    raise PreconditionError(f"unknown bijection {name!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--limit", type=int, default=argparse.SUPPRESS, help="raise the size guard of exhaustive searches")
    common.add_argument("--parallel", type=int, default=argparse.SUPPRESS, help="worker processes for counting")

    ap = argparse.ArgumentParser(prog="uniqsort", parents=[common], description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("sort", parents=[common], help="apply the stack-sorting map")
    s.add_argument("perm")
    s.add_argument("--recursive", action="store_true", help="use the recursive definition")

    s = sub.add_parser("fertility", parents=[common], help="count preimages under stack-sorting")
    s.add_argument("perm")
    s.add_argument("--method", choices=("census", "brute"), default="census")

    s = sub.add_parser("chc", parents=[common], help="canonical hook configuration (1-based positions)")
    s.add_argument("perm")
    s.add_argument("--deficiency", action="store_true")

    s = sub.add_parser("slide", parents=[common], help="apply a sliding operator")
    s.add_argument("perm")
    s.add_argument("--op", choices=OPS, default="swu")
    s.add_argument("--index", type=int, help="apply only the operator with this index")

    s = sub.add_parser("avoiders", parents=[common], help="list or count Av_n(patterns)")
    s.add_argument("n", type=int)
    s.add_argument("--patterns", default="")
    s.add_argument("--count", action="store_true")

    s = sub.add_parser("unique", parents=[common], help="list or count U_(2k+1)(patterns)")
    s.add_argument("k", type=int)
    s.add_argument("--patterns", default="")
    s.add_argument("--count", action="store_true")

    s = sub.add_parser("intervals", parents=[common], help="list or count poset intervals")
    s.add_argument("k", type=int)
    s.add_argument("--kind", choices=dyck.KINDS + ("noncrossing",), default="stanley")
    s.add_argument("--count", action="store_true")

    s = sub.add_parser("bijection", parents=[common], help="apply a named bijection")
    s.add_argument("name", choices=BIJECTIONS)
    s.add_argument("input")
    s.add_argument("--inverse", action="store_true")

    s = sub.add_parser("sequence", parents=[common], help="|U_(2k+1)(patterns)| for k = 0..max-k")
    s.add_argument("--patterns", default="")
    s.add_argument("--max-k", type=int, default=4)
    s.add_argument("--reference", action="store_true", help="rebuild the saved reference table")

    s = sub.add_parser("series", parents=[common], help="series coefficients or closed forms")
    s.add_argument("name", choices=formulas.SERIES + formulas.FORMULAS + ("eq16_residual",))
    s.add_argument("--order", type=int, default=8)

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    s.add_argument("--max-k", type=int, default=4)
    return ap


def run(args: argparse.Namespace) -> tuple[list[dict], int]:
    cmd = args.command
    limit = getattr(args, "limit", None)
    parallel = getattr(args, "parallel", 1)
    if cmd == "sort":
        p = parse_perm(args.perm)
        out = stack_sort_recursive(p) if args.recursive else stack_sort(p)
        return [record(args.perm, "sort", format_perm(out))], 0
    if cmd == "fertility":
        p = parse_perm(args.perm)
        return [record(args.perm, "fertility", None, count=fertility(p, args.method, limit))], 0
    if cmd == "chc":
        p = parse_perm(args.perm)
        recs = [record(args.perm, "chc", _hooks_text(canonical_hooks(p)))]
        if args.deficiency:
            recs.append(record(args.perm, "deficiency", None, count=deficiency(p)))
        return recs, 0
    if cmd == "slide":
        p = parse_perm(args.perm)
        if args.index is None:
            out, op = slide(p, args.op), args.op
        else:
            out, op = slide_indexed(p, args.op, args.index), f"{args.op}_{args.index}"
        return [record(args.perm, op, format_perm(out))], 0
    if cmd in ("avoiders", "unique"):
        pats = parse_patterns(args.patterns)
        size = args.n if cmd == "avoiders" else args.k
        if cmd == "avoiders":
            stream = enumerate_avoiders(args.n, pats)
        else:
            stream = enumerate_uniquely_sorted(args.k, pats, limit=limit)
        if args.count:
            return [record(args.patterns, cmd, None, k=size, count=sum(1 for _ in stream))], 0
        return [record(args.patterns, cmd, format_perm(q), k=size) for q in stream], 0
    if cmd == "intervals":
        if args.kind == "noncrossing":
            items = [str(iv) for iv in noncross.intervals_pairwise(args.k, limit)]
        else:
            items = [str(iv) for iv in dyck.intervals(args.k, args.kind, limit)]
        if args.count:
            return [record(args.kind, "intervals", None, k=args.k, count=len(items))], 0
        return [record(args.kind, "intervals", s, k=args.k) for s in items], 0
    if cmd == "bijection":
        op = args.name + ("_inverse" if args.inverse else "")
        out, k = _run_bijection(args.name, args.input, args.inverse)
        return [record(args.input, op, out, k=k)], 0
    if cmd == "sequence":
        if args.reference:
            path = sequences.write_reference(sequences.build_reference(args.max_k, parallel))
            return [record("reference", "sequence", path)], 0
        recs = sequences.compute_sequence(args.patterns, args.max_k, limit=limit, parallel=parallel)
        return [record(r.patterns, "sequence", None, k=r.k, count=r.count) for r in recs], 0
    if cmd == "series":
        if args.name in formulas.SERIES:
            vals = formulas.series_coefficients(args.name, args.order)
        elif args.name == "eq16_residual":
            vals = formulas.eq16_residual(args.order)
        else:
            vals = [formulas.closed_form(args.name, k) for k in range(args.order + 1)]
        return [record(args.name, "series", None, k=k, count=v) for k, v in enumerate(vals)], 0
    if cmd == "verify":
        checks = verify.verify(args.suite, args.max_k)
        recs = [
            record(
                f"{c.suite}: {c.name}",
                "verify",
                f"{'PASS' if c.passed else 'FAIL'} {c.suite}: {c.name} [{c.detail}] {c.seconds:.2f}s",
                k=args.max_k,
                count=int(c.passed),
            )
            for c in checks
        ]
        return recs, 0 if all(c.passed for c in checks) else 1
    raise AssertionError(cmd)


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "limit", None) is not None:
        os.environ["UNIQSORT_LIMIT"] = str(args.limit)
    try:
        recs, code = run(args)
    except (PreconditionError, ResourceLimitError, ValueError) as exc:
        print(f"uniqsort: error: {exc}", file=sys.stderr)
        return 2
    emit(recs, getattr(args, "format", "text"))
    return code


if __name__ == "__main__":
    sys.exit(main())
