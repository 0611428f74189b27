"""Command-line front end.

Subcommands: exists, construct, verify, enumerate, quiver, embed.
Exit codes: 0 success / verified, 1 domain failure (condition unsatisfied,
verification failed), 2 usage or unreadable input, 3 internal assertion.
Every command is flag-driven (no environment variables) and produces
byte-identical output on repeated runs; machine output sits behind --json.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .construct import (
    ConditionNotSatisfied,
    InvalidClassOrder,
    condition_star,
    construct_general_detailed,
)
from .crossing import is_symmetric
from .cyclic import InvalidRange
from .enumeration import enumerate_symmetric_maximal
from .files import (
    CollectionFileError,
    collection_to_json,
    load_collection,
    save_collection,
)
from .plabic import build_complex, export, jacobian_quiver, nakayama, orient
from .verify import CapExceeded, verify

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _jdump(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _parse_order(text: Optional[str]) -> Optional[tuple[int, ...]]:
    if text is None:
        return None
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--order expects comma-separated integers, got {text!r}")


def cmd_exists(args) -> int:
    rep = condition_star(args.k, args.n)
    if args.json:
        sys.stdout.write(_jdump(rep.to_dict()))
    else:
        verdict = "yes" if rep.satisfied else "no"
        residue = args.k % rep.d if rep.d else 0
        sys.stdout.write(
            f"k={args.k} n={args.n} g={rep.g} d={rep.d} k mod d = {residue}: "
            f"symmetric maximal collection exists: {verdict}\n"
        )
    return EXIT_OK if rep.satisfied else EXIT_DOMAIN


def cmd_construct(args) -> int:
    order = _parse_order(args.order)
    try:
        detail = construct_general_detailed(args.k, args.n, order)
    except ConditionNotSatisfied as exc:
        doc = exc.report.to_dict()
        if args.json:
            sys.stdout.write(_jdump({"error": "condition_not_satisfied", "condition": doc}))
        else:
            sys.stderr.write(f"condition not satisfied: {exc}\n")
        return EXIT_DOMAIN
    except InvalidClassOrder as exc:
        sys.stderr.write(f"invalid class order: {exc}\n")
        return EXIT_USAGE
    C = detail.collection
    meta = {"generator": "noncross 0.1.0"}
    if order is not None:
        meta["class_order"] = list(order)
    stages = None
    if args.stages and detail.inner is not None:
        stages = {
            f"B{plan.s}": [list(s) for s in plan.b_s] for plan in detail.inner.stages
        }
    if args.out:
        save_collection(C, args.out, meta)
        if not args.json:
            sys.stdout.write(f"wrote {len(C)} sets to {args.out}\n")
    if args.json or not args.out:
        doc = json.loads(collection_to_json(C, meta))
        if stages is not None:
            doc["stages"] = stages
        sys.stdout.write(_jdump(doc))
    elif stages is not None:
        for name in sorted(stages, key=lambda t: int(t[1:])):
            sys.stdout.write(f"{name}: {json.dumps(stages[name], separators=(',', ':'))}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        C, _ = load_collection(args.file)
    except CollectionFileError as exc:
        sys.stderr.write(f"{args.file}: {exc}\n")
        return EXIT_USAGE
    rep = verify(C, expect_symmetric=args.symmetric)
    if args.json:
        sys.stdout.write(_jdump(rep.to_dict()))
    else:
        for line in rep.lines():
            sys.stdout.write(line + "\n")
    return EXIT_OK if rep.ok else EXIT_DOMAIN


def cmd_enumerate(args) -> int:
    try:
        if args.count_only:
            count = enumerate_symmetric_maximal(args.k, args.n, count_only=True)
            results = None
        else:
            results = enumerate_symmetric_maximal(args.k, args.n)
            count = len(results)
    except CapExceeded as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    written = []
    if args.out and results is not None:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for i, C in enumerate(results):
            path = outdir / f"k{args.k}_n{args.n}_{i:04d}.json"
            save_collection(C, path, {"index": i})
            written.append(str(path))
    if args.json:
        doc = {"k": args.k, "n": args.n, "count": count}
        if written:
            doc["files"] = written
        sys.stdout.write(_jdump(doc))
    else:
        sys.stdout.write(f"{count}\n")
        for path in written:
            sys.stdout.write(f"wrote {path}\n")
    return EXIT_OK


def _load_verified(args) -> tuple:
    """Shared quiver/embed gate: load, then refuse unverified input."""
    try:
        C, _ = load_collection(args.file)
    except CollectionFileError as exc:
        sys.stderr.write(f"{args.file}: {exc}\n")
        return None, EXIT_USAGE
    rep = verify(C)
    if not rep.maximal or not rep.contains_all_intervals:
        for line in rep.lines():
            sys.stderr.write(line + "\n")
        sys.stderr.write("input is not a maximal noncrossing collection\n")
        return None, EXIT_DOMAIN
    return C, EXIT_OK


def _emit(document: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(document, encoding="utf-8")
    else:
        sys.stdout.write(document)


def cmd_quiver(args) -> int:
    C, status = _load_verified(args)
    if C is None:
        return status
    qp = orient(build_complex(C))
    symmetric = is_symmetric(C)
    if args.jacobian:
        if symmetric:
            result = nakayama(jacobian_quiver(qp), C.k, C.n)
            sys.stderr.write(f"nakayama order: {result.order}\n")
        qp = jacobian_quiver(qp)
    sys.stderr.write(f"rotation-invariant: {'true' if symmetric else 'false'}\n")
    _emit(export(qp, args.format), args.out)
    return EXIT_OK


def cmd_embed(args) -> int:
    C, status = _load_verified(args)
    if C is None:
        return status
    cx = build_complex(C)
    symmetric = is_symmetric(C)
    sys.stderr.write(f"rotation-invariant: {'true' if symmetric else 'false'}\n")
    _emit(export(cx, args.format), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noncross",
        description="Symmetric maximal noncrossing collections of k-subsets of [n].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exists", help="existence arithmetic for (k, n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_exists)

    p = sub.add_parser("construct", help="build a symmetric maximal collection")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=str, default=None,
                   help="class order, e.g. 3,4,2,1 (full) or an order on 1..g")
    p.add_argument("--out", type=str, default=None, help="output collection file")
    p.add_argument("--stages", action="store_true",
                   help="also emit the intermediate stage families B_s")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a collection file")
    p.add_argument("file")
    p.add_argument("--symmetric", action="store_true",
                   help="additionally require invariance under +k")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="enumerate all symmetric maximal collections")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out", type=str, default=None, help="directory for one file per collection")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("quiver", help="oriented quiver with potential of a collection")
    p.add_argument("file")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--jacobian", action="store_true",
                   help="remove frozen (interval) vertices first")
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("embed", help="planar complex of a collection")
    p.add_argument("file")
    p.add_argument("--format", choices=["json", "svg", "tikz"], default="json")
    p.add_argument("--out", type=str, default=None)
    p.set_defaults(func=cmd_embed)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidRange, InvalidClassOrder) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except AssertionError as exc:
        sys.stderr.write(f"internal assertion failed: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
