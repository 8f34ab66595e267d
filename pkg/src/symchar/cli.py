"""Command-line front end.

    symchar value --alpha 2,1 --beta 3
    symchar table --n 8 --format csv --out table8.csv
    symchar verify --n 8 --checks all
    symchar bench --n 10 --engine both

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 semantic input error such as mismatched weights, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path
from typing import IO

from .checks import CHECK_NAMES, standard_suite
from .murnaghan import mn_table
from .partitions import parse_partition_text, partition_text, partitions_of, weight
from .tables import BuildCounters, CharTable, character_table

FORMAT_VERSION = 1

__all__ = ["main", "table_to_obj", "table_from_obj"]


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symchar",
        description="Exact character tables of symmetric groups.",
    )
    parser.add_argument(
        "--threads", type=int, default=1, help="worker threads for row-level table building"
    )
    parser.add_argument(
        "--cache", type=Path, default=None, metavar="DIR", help="directory for cached tables"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", help="print a single character value")
    p.add_argument("--alpha", required=True, help="character partition, e.g. 3,1,1 (empty for n=0)")
    p.add_argument("--beta", required=True, help="class cycle type, e.g. 2,2,1")

    p = sub.add_parser("table", help="emit a whole character table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("pretty", "csv", "json"), default="pretty")
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("verify", help="run identity checks, one JSON line each")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--checks",
        default="all",
        help="comma list from: " + ",".join(CHECK_NAMES) + " (default: all)",
    )
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("bench", help="time the recursion against the border-strip evaluator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--engine", choices=("recursion", "mn", "both"), default="both")
    return parser


def _parse_partition_arg(flag: str, text: str):
    try:
        return parse_partition_text(text)
    except ValueError as exc:
        raise CliError(2, f"{flag}: {exc}") from None


def _cmd_value(args) -> int:
    alpha = _parse_partition_arg("--alpha", args.alpha)
    beta = _parse_partition_arg("--beta", args.beta)
    if weight(alpha) != weight(beta):
        raise CliError(
            3, f"weights differ: |{partition_text(alpha)}| = {weight(alpha)} but "
            f"|{partition_text(beta)}| = {weight(beta)}"
        )
    table = character_table(weight(alpha), threads=args.threads)
    print(table.value(alpha, beta))
    return 0


def table_to_obj(table: CharTable) -> dict:
    """JSON-ready form: values as decimal strings so no reader rounds them."""
    return {
        "n": table.n,
        "order": [partition_text(p) for p in table.order],
        "values": [[str(v) for v in row] for row in table.values],
    }


def table_from_obj(obj: dict) -> CharTable:
    """Parse the JSON form back; rejects anything not shaped like our output."""
    n = int(obj["n"])
    order = tuple(parse_partition_text(s) for s in obj["order"])
    values = tuple(tuple(int(v) for v in row) for row in obj["values"])
    if order != partitions_of(n):
        raise ValueError("table object has an unexpected class order")
    if len(values) != len(order) or any(len(row) != len(order) for row in values):
        raise ValueError("table object has a ragged value grid")
    return CharTable(n, order, values)


def _write_json(table: CharTable, stream: IO[str]) -> None:
    # Emitted row by row so large tables never exist as one serialized blob.
    head = {"n": table.n, "order": [partition_text(p) for p in table.order]}
    stream.write('{"n": %d, "order": %s, "values": [' % (table.n, json.dumps(head["order"])))
    for i, row in enumerate(table.values):
        stream.write(",\n " if i else "\n ")
        stream.write(json.dumps([str(v) for v in row]))
    stream.write("\n]}\n")


def _write_csv(table: CharTable, stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    labels = [partition_text(p) for p in table.order]
    writer.writerow([""] + labels)
    for label, row in zip(labels, table.values):
        writer.writerow([label] + [str(v) for v in row])


def _write_pretty(table: CharTable, stream: IO[str]) -> None:
    labels = [partition_text(p) for p in table.order]
    stub = max([len(s) for s in labels] + [1])
    widths = [
        max(len(labels[j]), max(len(str(row[j])) for row in table.values))
        for j in range(len(labels))
    ]
    header = " " * stub + "  " + "  ".join(l.rjust(w) for l, w in zip(labels, widths))
    stream.write(header.rstrip() + "\n")
    for label, row in zip(labels, table.values):
        cells = "  ".join(str(v).rjust(w) for v, w in zip(row, widths))
        stream.write(f"{label.rjust(stub)}  {cells}\n")


_WRITERS = {"json": _write_json, "csv": _write_csv, "pretty": _write_pretty}


def _load_or_build(n: int, threads: int, cache_dir: Path | None) -> CharTable:
    path = None
    if cache_dir is not None:
        path = Path(cache_dir) / f"table-v{FORMAT_VERSION}-n{n}.json"
        if path.exists():
            try:
                with open(path, encoding="utf-8") as fh:
                    return table_from_obj(json.load(fh))
            except (ValueError, KeyError, OSError):
                pass  # an unreadable cache entry is recomputed and rewritten
    table = character_table(n, threads=threads)
    if path is not None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8") as fh:
                _write_json(table, fh)
        except OSError as exc:
            raise CliError(4, f"cannot write cache file {path}: {exc}") from None
    return table


def _cmd_table(args) -> int:
    if args.n < 0:
        raise CliError(2, "--n must be nonnegative")
    table = _load_or_build(args.n, args.threads, args.cache)
    writer = _WRITERS[args.format]
    if args.out is None:
        writer(table, sys.stdout)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer(table, fh)
    except OSError as exc:
        raise CliError(4, f"cannot write {args.out}: {exc}") from None
    return 0


def _cmd_verify(args) -> int:
    if args.n < 1:
        raise CliError(2, "--n must be at least 1")
    if args.checks == "all":
        names: tuple[str, ...] = CHECK_NAMES
    else:
        names = tuple(tok for tok in args.checks.split(",") if tok)
        unknown = [tok for tok in names if tok not in CHECK_NAMES]
        if unknown:
            raise CliError(2, f"unknown checks: {','.join(unknown)}")
    all_passed = True
    for report in standard_suite(args.n, names, seed=args.seed, threads=args.threads):
        print(json.dumps(report.to_json()))
        all_passed = all_passed and report.passed
    return 0 if all_passed else 1


def _cmd_bench(args) -> int:
    if args.n < 0:
        raise CliError(2, "--n must be nonnegative")
    report: dict = {"n": args.n}
    recursion_table = border_table = None
    if args.engine in ("recursion", "both"):
        counters = BuildCounters()
        start = time.perf_counter()
        recursion_table = character_table(args.n, threads=args.threads, counters=counters)
        report["recursion"] = {
            "seconds": round(time.perf_counter() - start, 6),
            "entries": sum(len(partitions_of(k)) ** 2 for k in range(args.n + 1)),
            "exact_divisions": counters.exact_divisions,
        }
    if args.engine in ("mn", "both"):
        memo: dict = {}
        start = time.perf_counter()
        border_table = mn_table(args.n, memo=memo)
        report["mn"] = {
            "seconds": round(time.perf_counter() - start, 6),
            "evaluations": len(memo),
        }
    if recursion_table is not None and border_table is not None:
        report["agree"] = recursion_table.values == border_table.values
    print(json.dumps(report))
    return 0


_COMMANDS = {
    "value": _cmd_value,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own usage message
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except CliError as exc:
        print(f"symchar: {exc.message}", file=sys.stderr)
        return exc.code
