"""Command-line front end; every library operation is reachable from here.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 step budget
exceeded.  Output for a fixed command line is byte-identical across runs.
COLLATZ_MAX_STEPS overrides the default odd-step budget for walks, and
range-scan commands accept --workers for parallel partitioning (fixed
chunk boundaries keep the results identical for any worker count).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence, TextIO

from .analysis import (
    alpha_chain,
    alpha_chain_length,
    alpha_table_entry,
    drift_report,
    drift_series_decrease_parts,
    empirical_alpha_density,
    empirical_iterate_class_ratio,
    verify_theorems,
)
from .core import (
    DEFAULT_MAX_STEPS,
    DomainError,
    MaxStepsExceeded,
    alpha_of,
    classify,
    reverse_to_starter,
    syracuse_step,
)
from .tables import TableId, column_alpha, locate, predecessor_row, row_iterate, table_window_csv
from .trajectory import (
    record_json,
    stats_csv,
    trajectory_direct,
    trajectory_lookup,
    trajectory_stats,
)
from .tree import build_layers, export_tree

# audit map: library operations reachable through each command (directly
# or through the command's library calls); tests assert it is exhaustive
OPERATION_COVERAGE = {
    "classify": ("core.classify", "core.syracuse_step", "core.alpha_of", "core.is_terminal"),
    "trajectory": (
        "trajectory.trajectory_direct",
        "trajectory.trajectory_lookup",
        "trajectory.trajectory_stats",
    ),
    "predecessors": ("tables.predecessor_row", "core.reverse_to_starter"),
    "locate": ("tables.locate", "tables.row_iterate"),
    "tree": ("tree.build_layers", "tree.predecessors_of", "tree.export_tree", "core.terminal"),
    "alpha-table": (
        "analysis.alpha_table_entry",
        "analysis.alpha_chain",
        "analysis.alpha_chain_length",
    ),
    "drift": (
        "analysis.drift_series_increase",
        "analysis.drift_series_decrease",
        "analysis.empirical_drift",
    ),
    "verify": (
        "analysis.verify_theorems",
        "analysis.empirical_alpha_density",
        "analysis.empirical_iterate_class_ratio",
    ),
    "table-export": (
        "tables.table_entry",
        "tables.row_iterate",
        "core.terminal",
        "core.pre_terminal",
    ),
}


def _max_steps_from_env() -> int:
    raw = os.environ.get("COLLATZ_MAX_STEPS")
    if raw is None:
        return DEFAULT_MAX_STEPS
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"COLLATZ_MAX_STEPS must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError(f"COLLATZ_MAX_STEPS must be >= 1, got {value}")
    return value


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="collatzkit",
        description="Odd-iterate Collatz toolkit: classification, predecessor tables, "
        "trajectories, tree layers, drift statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify an odd integer and show its single step")
    p.add_argument("value", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("trajectory", help="odd-iterate walk down to 1")
    p.add_argument("start", type=int)
    p.add_argument("--end", type=int, default=None, help="scan odd starts up to END inclusive")
    p.add_argument("--method", choices=("direct", "lookup"), default="direct")
    p.add_argument("--stats", action="store_true", help="aggregate the scanned records")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("predecessors", help="odd integers stepping onto a given iterate")
    p.add_argument("iterate", type=int)
    p.add_argument("--count", type=int, default=5)
    p.add_argument(
        "--to-starter",
        action="store_true",
        help="walk least predecessors upward until an odd multiple of 3",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("locate", help="table coordinate of an odd integer")
    p.add_argument("value", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("tree", help="layered tree rooted at 1")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--breadth", type=int, default=4)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")

    p = sub.add_parser("alpha-table", help="alpha=1 run lengths: table window or one run")
    p.add_argument("--rows", type=int, default=36)
    p.add_argument("--cols", type=int, default=10)
    p.add_argument("--chain", type=int, default=None, metavar="X", help="show the run from X")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("drift", help="average-drift series and measured per-step factor")
    p.add_argument("--terms", type=int, default=None)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="bounded scans: theorem properties, alpha density, class ratio")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--max-alpha", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("table-export", help="CSV window of a predecessor table")
    p.add_argument("--table", choices=("A", "B"), required=True)
    p.add_argument("--rows", type=int, default=36)
    p.add_argument("--cols", type=int, default=None, help="defaults to 5 for A, 6 for B")

    return parser


def _cmd_classify(args: argparse.Namespace, out: TextIO) -> None:
    cls = classify(args.value)
    step = syracuse_step(args.value)
    payload = {
        "value": args.value,
        "kind": cls.kind.value,
        "is_terminal": cls.is_terminal,
        "is_end": cls.is_end,
        "iterate": step.iterate,
        "alpha": alpha_of(args.value),
    }
    if args.format == "json":
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(
            f"value={payload['value']} kind={payload['kind']} "
            f"terminal={_yesno(cls.is_terminal)} end={_yesno(cls.is_end)} "
            f"iterate={payload['iterate']} alpha={payload['alpha']}\n"
        )


def _stats_payload(stats) -> dict:
    return {
        "count": stats.count,
        "odd_length": vars(stats.odd_length).copy(),
        "total_divisions": vars(stats.total_divisions).copy(),
        "peak": vars(stats.peak).copy(),
    }


def _cmd_trajectory(args: argparse.Namespace, out: TextIO) -> None:
    max_steps = _max_steps_from_env()
    walk = trajectory_lookup if args.method == "lookup" else trajectory_direct
    if args.format == "csv" and not args.stats:
        raise DomainError("csv output is only available with --stats")
    if args.end is None:
        starts = [args.start]
    else:
        if args.end < args.start:
            raise DomainError(f"--end {args.end} is below the start {args.start}")
        first = args.start if args.start % 2 else args.start + 1
        starts = range(first, args.end + 1, 2)
    if args.stats:
        stats = trajectory_stats([walk(x, max_steps) for x in starts])
        if args.format == "csv":
            out.write(stats_csv(stats))
        elif args.format == "json":
            out.write(json.dumps(_stats_payload(stats)) + "\n")
        else:
            out.write(f"count={stats.count}\n")
            for name, f in (
                ("odd_length", stats.odd_length),
                ("total_divisions", stats.total_divisions),
                ("peak", stats.peak),
            ):
                out.write(f"{name} min={f.minimum} max={f.maximum} mean={f.mean!r}\n")
        return
    for x in starts:
        rec = walk(x, max_steps)
        if args.format == "json":
            out.write(record_json(rec) + "\n")
        else:
            out.write(" ".join(str(v) for v in (rec.start, *rec.iterates)) + "\n")


def _cmd_predecessors(args: argparse.Namespace, out: TextIO) -> None:
    if args.to_starter:
        chain = reverse_to_starter(args.iterate, _max_steps_from_env())
        payload: dict = {"value": args.iterate, "chain": chain}
        text = " ".join(map(str, chain))
    else:
        row = predecessor_row(args.iterate, args.count)
        payload = {"iterate": row.iterate, "entries": list(row.entries)}
        text = " ".join(map(str, row.entries))
    if args.format == "json":
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(text + "\n")


def _cmd_locate(args: argparse.Namespace, out: TextIO) -> None:
    coord = locate(args.value)
    payload = {
        "value": args.value,
        "table": coord.table.value,
        "column": coord.column,
        "row": coord.row,
        "alpha": column_alpha(coord.table, coord.column),
        "iterate": row_iterate(coord.table, coord.row),
    }
    if args.format == "json":
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(
            f"value={payload['value']} table={payload['table']} column={payload['column']} "
            f"row={payload['row']} alpha={payload['alpha']} iterate={payload['iterate']}\n"
        )


def _cmd_tree(args: argparse.Namespace, out: TextIO) -> None:
    layers = build_layers(args.depth, args.breadth)
    out.write(export_tree(layers, args.format).decode("utf-8"))


def _cmd_alpha_table(args: argparse.Namespace, out: TextIO) -> None:
    if args.chain is not None:
        run = alpha_chain(args.chain)
        payload = {
            "start": run.start,
            "length": alpha_chain_length(args.chain),
            "chain": list(run.chain),
            "exit_iterate": run.exit_iterate,
        }
        if args.format == "json":
            out.write(json.dumps(payload) + "\n")
        else:
            chain_text = " ".join(map(str, run.chain))
            out.write(
                f"start={run.start} length={payload['length']} "
                f"chain={chain_text} exit={run.exit_iterate}\n"
            )
        return
    rows = [
        [n, *(alpha_table_entry(h, n) for h in range(1, args.cols + 1))]
        for n in range(1, args.rows + 1)
    ]
    if args.format == "json":
        out.write(json.dumps({"rows": args.rows, "cols": args.cols, "values": rows}) + "\n")
        return
    sep = "," if args.format == "csv" else " "
    out.write(sep.join(["n", *(f"h={h}" for h in range(1, args.cols + 1))]) + "\n")
    for row in rows:
        out.write(sep.join(map(str, row)) + "\n")


def _cmd_drift(args: argparse.Namespace, out: TextIO) -> None:
    n_terms = args.terms
    if n_terms is None and args.bound is None:
        n_terms = 60
    report = drift_report(n_terms=n_terms, scan_bound=args.bound, workers=args.workers)
    if args.format == "json":
        payload = {
            "n_terms": report.n_terms,
            "series_increase": None,
            "series_increase_limit": 3.0,
            "series_decrease": None,
            "series_decrease_limit": 0.25,
            "scan_bound": report.scan_bound,
            "empirical_value": report.empirical_value,
            "target": report.target,
            "tolerance": report.tolerance,
        }
        if report.series_increase is not None:
            payload["series_increase"] = float(report.series_increase)
            payload["series_decrease"] = float(report.series_decrease)
        out.write(json.dumps(payload) + "\n")
        return
    if report.series_increase is not None:
        odd_part, even_part = drift_series_decrease_parts(report.n_terms)
        out.write(
            f"increase series: terms={report.n_terms} "
            f"sum={float(report.series_increase)!r} limit=3\n"
        )
        out.write(
            f"decrease series: terms={report.n_terms} "
            f"sum={float(report.series_decrease)!r} limit=0.25 "
            f"odd-alpha={float(odd_part)!r} even-alpha={float(even_part)!r}\n"
        )
    if report.empirical_value is not None:
        out.write(
            f"empirical: bound={report.scan_bound} "
            f"geometric-mean={report.empirical_value!r} "
            f"target={report.target!r} tolerance={report.tolerance!r}\n"
        )


def _cmd_verify(args: argparse.Namespace, out: TextIO) -> None:
    bound = args.bound
    max_alpha = args.max_alpha
    if max_alpha is None:
        max_alpha = max(1, min(10, bound.bit_length() - 2))
    theorem = verify_theorems(bound, _max_steps_from_env(), workers=args.workers)
    density = empirical_alpha_density(bound, max_alpha, workers=args.workers)
    ratio_6m1, ratio_6m5 = empirical_iterate_class_ratio(bound, workers=args.workers)
    if args.format == "json":
        payload = {
            "bound": bound,
            "trajectories": theorem.trajectories,
            "iterates_checked": theorem.iterates_checked,
            "multiple_of_three_violations": [list(w) for w in theorem.multiple_of_three],
            "duplicate_violations": [list(w) for w in theorem.duplicates],
            "alpha_density": [
                {"alpha": b.alpha, "count": b.count, "ratio": b.ratio, "expected": 2.0**-b.alpha}
                for b in density.buckets
            ],
            "iterate_class_ratio": {"6m+1": ratio_6m1, "6m+5": ratio_6m5},
        }
        out.write(json.dumps(payload) + "\n")
        return
    if args.format == "csv":
        out.write("alpha,count,ratio,expected\n")
        for b in density.buckets:
            out.write(f"{b.alpha},{b.count},{b.ratio!r},{2.0 ** -b.alpha!r}\n")
        return
    out.write(
        f"theorem scan: bound={bound} trajectories={theorem.trajectories} "
        f"iterates={theorem.iterates_checked} multiple-of-3-violations="
        f"{len(theorem.multiple_of_three)} duplicate-violations={len(theorem.duplicates)}\n"
    )
    out.write(f"alpha density: bound={bound} odds={density.odd_total}\n")
    for b in density.buckets:
        out.write(
            f"  alpha={b.alpha} count={b.count} ratio={b.ratio!r} expected={2.0 ** -b.alpha!r}\n"
        )
    out.write(f"iterate classes: 6m+1={ratio_6m1!r} 6m+5={ratio_6m5!r}\n")


def _cmd_table_export(args: argparse.Namespace, out: TextIO) -> None:
    table = TableId(args.table)
    cols = args.cols
    if cols is None:
        cols = 5 if table is TableId.A else 6
    out.write(table_window_csv(table, args.rows, cols))


_HANDLERS = {
    "classify": _cmd_classify,
    "trajectory": _cmd_trajectory,
    "predecessors": _cmd_predecessors,
    "locate": _cmd_locate,
    "tree": _cmd_tree,
    "alpha-table": _cmd_alpha_table,
    "drift": _cmd_drift,
    "verify": _cmd_verify,
    "table-export": _cmd_table_export,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    """Parse argv, dispatch, and return the process exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        _HANDLERS[args.command](args, out)
        return 0
    except MaxStepsExceeded as exc:
        err.write(f"error: {exc}\n")
        return 3
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
