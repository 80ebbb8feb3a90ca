"""``pytree`` command-line front end.

Exit codes: 0 ok, 2 bad flags (argparse), 3 invalid input triple or even D,
4 D not representable, 5 verification mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from collections.abc import Iterable, Iterator
from typing import TextIO

from . import diffs
from .tree import (
    KINDS,
    PrimTriple,
    TreePath,
    children,
    format_path,
    level_items,
    locate,
    params_from_triple,
    parent,
    walk,
    word_for,
)
from .words import format_word

FIELDS = ("s", "c", "n", "m", "n2", "level", "path", "word")

EXIT_INVALID = 3
EXIT_UNREPRESENTABLE = 4
EXIT_MISMATCH = 5


class CliError(Exception):
    def __init__(self, message: str, code: int) -> None:
        super().__init__(message)
        self.code = code


def record(t: PrimTriple, path: TreePath | None = None) -> dict:
    """The wire record; ``n2`` is the tree parameter n, ``n`` the hypotenuse."""
    if path is None:
        path = locate(t)
    m, n2 = params_from_triple(t)
    return {
        "s": t.s, "c": t.c, "n": t.n, "m": m, "n2": n2,
        "level": len(path),
        "path": format_path(path),
        "word": format_word(word_for(path)),
    }


def write_records(records: Iterable[dict], fmt: str, out: TextIO) -> None:
    if fmt == "jsonl":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
    elif fmt == "csv":
        writer = None
        for rec in records:
            if writer is None:
                writer = csv.DictWriter(out, fieldnames=list(rec), lineterminator="\n")
                writer.writeheader()
            writer.writerow(rec)
    elif fmt == "text":
        for rec in records:
            extra = f"  {rec['diff']}" if "diff" in rec else ""
            out.write(f"{rec['s']},{rec['c']},{rec['n']}{extra}\n")
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(fmt)


def _node_id(t: PrimTriple) -> str:
    return f"t{t.s}_{t.c}_{t.n}"


def write_dot(depth: int, out: TextIO) -> None:
    out.write("digraph pythagorean_tree {\n")
    out.write("  ordering=out;\n  node [shape=box];\n")
    for level in range(depth + 1):
        for _, t in level_items(level):
            out.write(f'  {_node_id(t)} [label="{t.s},{t.c},{t.n}"];\n')
    for level in range(depth):
        for _, t in level_items(level):
            for kind, c in zip(KINDS, children(t)):
                out.write(f'  {_node_id(t)} -> {_node_id(c)} [label="{kind.value}"];\n')
    out.write("}\n")


def enumerate_records(depth: int) -> Iterator[dict]:
    for level in range(depth + 1):
        for path, t in level_items(level):
            yield record(t, path)


def _triple(args: argparse.Namespace) -> PrimTriple:
    try:
        return PrimTriple(args.S, args.C, args.N)
    except ValueError as exc:
        raise CliError(f"invalid triple: {exc}", EXIT_INVALID) from None


def _odd(D: int) -> int:
    if D % 2 == 0:
        raise CliError(f"D = {D} must be odd", EXIT_INVALID)
    return D


def cmd_enumerate(args, out):
    if args.depth < 0:
        raise CliError("--depth must be non-negative", 2)
    if args.format == "dot":
        write_dot(args.depth, out)
    else:
        write_records(enumerate_records(args.depth), args.format, out)
    return 0


def cmd_children(args, out):
    t = _triple(args)
    path = locate(t)
    write_records(
        (record(c, path + (k,)) for k, c in zip(KINDS, children(t))), args.format, out
    )
    return 0


def cmd_parent(args, out):
    t = _triple(args)
    up = parent(t)
    if up is None:
        out.write("root\n")
        return 0
    p, kind = up
    rec = record(p)
    if args.format == "text":
        out.write(f"{p.s},{p.c},{p.n} via {kind.value}\n")
    else:
        write_records([rec], args.format, out)
    return 0


def cmd_diff_path(args, out):
    t = _triple(args)
    if args.steps < 1:
        raise CliError("--steps must be at least 1", 2)
    form = diffs.DiffForm(args.form)
    start = locate(t)
    kind = diffs.invariant_child_kind(form)
    recs = []
    for i, node in enumerate(diffs.difference_path(t, form, args.steps)):
        rec = record(node, start + (kind,) * i)
        rec["diff"] = diffs.difference_value(node, form)
        recs.append(rec)
    write_records(recs, args.format, out)
    return 0


def cmd_diff_root(args, out):
    D = _odd(args.D)
    try:
        root = diffs.root_triple_for_difference(D)
    except diffs.NotRepresentableError as exc:
        raise CliError(str(exc), EXIT_UNREPRESENTABLE) from None
    write_records([record(root)], args.format, out)
    return 0


def cmd_solve_pell(args, out):
    D = _odd(args.D)
    try:
        u = diffs.solve_norm(D)
    except diffs.NotRepresentableError as exc:
        raise CliError(str(exc), EXIT_UNREPRESENTABLE) from None
    out.write((u.ascii() if args.ascii else str(u)) + "\n")
    return 0


def brute_force_triples(max_hypotenuse: int) -> set[tuple[int, int, int]]:
    found = set()
    m = 2
    while m * m + 1 <= max_hypotenuse:
        for n in range(1 + m % 2, m, 2):
            if m * m + n * n > max_hypotenuse:
                break
            if math.gcd(m, n) == 1:
                found.add((m * m - n * n, 2 * m * n, m * m + n * n))
        m += 1
    return found


def cmd_verify(args, out):
    bound = args.max_n
    if bound < 5:
        raise CliError("--max-n must be at least 5", 2)
    from_tree = [tuple(t) for t, _ in walk(bound)]
    tree_set = set(from_tree)
    oracle = brute_force_triples(bound)
    duplicates = len(from_tree) - len(tree_set)
    out.write(f"max hypotenuse: {bound}\n")
    out.write(f"tree: {len(from_tree)} triples ({duplicates} duplicates)\n")
    out.write(f"brute force: {len(oracle)} triples\n")
    if duplicates == 0 and tree_set == oracle:
        out.write("match\n")
        return 0
    out.write("MISMATCH\n")
    for t in sorted(tree_set - oracle):
        out.write(f"  tree only: {t}\n")
    for t in sorted(oracle - tree_set):
        out.write(f"  brute force only: {t}\n")
    return EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pytree", description="Primitive Pythagorean triple tree tools."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def triple_args(p):
        for name in ("S", "C", "N"):
            p.add_argument(name, type=int)

    def fmt_arg(p, choices=("jsonl", "csv", "text")):
        p.add_argument("--format", choices=choices, default="jsonl")

    p = sub.add_parser("enumerate", help="all nodes down to a depth, level by level")
    p.add_argument("--depth", type=int, required=True)
    fmt_arg(p, ("jsonl", "csv", "dot", "text"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("children", help="the three children, in U-, L+, U+ order")
    triple_args(p)
    fmt_arg(p)
    p.set_defaults(func=cmd_children)

    p = sub.add_parser("parent", help="the parent triple, or 'root'")
    triple_args(p)
    fmt_arg(p)
    p.set_defaults(func=cmd_parent)

    p = sub.add_parser("diff-path", help="follow the edge kind that keeps a difference")
    triple_args(p)
    p.add_argument("--form", choices=("P", "Q", "R"), required=True)
    p.add_argument("--steps", type=int, required=True)
    fmt_arg(p)
    p.set_defaults(func=cmd_diff_path)

    p = sub.add_parser("diff-root", help="smallest triple with S - C = D")
    p.add_argument("D", type=int)
    fmt_arg(p)
    p.set_defaults(func=cmd_diff_root)

    p = sub.add_parser("solve-pell", help="canonical solution of a^2 - 2b^2 = D")
    p.add_argument("D", type=int)
    p.add_argument("--ascii", action="store_true", help="print a+b*sqrt2")
    p.set_defaults(func=cmd_solve_pell)

    p = sub.add_parser("verify", help="compare the tree with a brute-force (m, n) scan")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    if out is None:
        out = sys.stdout
        if hasattr(out, "reconfigure"):
            out.reconfigure(encoding="utf-8")
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"pytree: {exc}", file=sys.stderr)
        return exc.code
    finally:
        out.flush()


def entry() -> None:
    sys.exit(main())
