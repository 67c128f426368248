"""Odd-iterate trajectories, built two independent ways.

trajectory_direct repeats the (3x+1)/2**alpha step; trajectory_lookup
never touches that formula and instead reads each next iterate off the
predecessor-table layout: strip x -> (x-1)/4 while x == 5 (mod 8), then
emit 6*floor(x/4)+5 or 6*floor(x/8)+1 depending on the residue.  The two
routes must agree element for element, alphas included (the lookup route
recovers alpha from the column it stripped through).

Records hold odd iterates only; even intermediates are never materialised.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable

from .core import DEFAULT_MAX_STEPS, DomainError, MaxStepsExceeded, _raw_step, _require_count, _require_odd


@dataclass(frozen=True)
class TrajectoryRecord:
    start: int
    iterates: tuple[int, ...]  # ends at 1
    alphas: tuple[int, ...]  # one per step
    odd_length: int  # number of steps == len(iterates)
    total_divisions: int  # sum of alphas
    peak: int  # maximum iterate (start is held separately and not included)
    terminal_reached: int  # penultimate iterate, or start when start is terminal


def _record(start: int, iterates: list[int], alphas: list[int]) -> TrajectoryRecord:
    return TrajectoryRecord(
        start=start,
        iterates=tuple(iterates),
        alphas=tuple(alphas),
        odd_length=len(iterates),
        total_divisions=sum(alphas),
        peak=max(iterates),
        terminal_reached=iterates[-2] if len(iterates) >= 2 else start,
    )


def _run(start: int, step: Callable[[int], tuple[int, int]], max_steps: int) -> TrajectoryRecord:
    iterates: list[int] = []
    alphas: list[int] = []
    append_i = iterates.append
    append_a = alphas.append
    cur = start
    for _ in range(max_steps):
        cur, alpha = step(cur)
        append_i(cur)
        append_a(alpha)
        if cur == 1:
            return _record(start, iterates, alphas)
    raise MaxStepsExceeded(start, max_steps)


def trajectory_direct(x: int, max_steps: int = DEFAULT_MAX_STEPS) -> TrajectoryRecord:
    """Record of repeated (3x+1)/2**alpha steps from x down to 1."""
    _require_odd(x)
    _require_count(max_steps, 1, "max_steps")
    return _run(x, _raw_step, max_steps)


def _lookup_step(x: int) -> tuple[int, int]:
    # next iterate and alpha read straight off the table layout; no 3x+1 arithmetic
    strips = 0
    while x % 8 == 5:
        x = (x - 1) // 4
        strips += 1
    if x % 4 == 3:
        return 6 * (x // 4) + 5, 2 * strips + 1
    return 6 * (x // 8) + 1, 2 * strips + 2


def trajectory_lookup(x: int, max_steps: int = DEFAULT_MAX_STEPS) -> TrajectoryRecord:
    """Same record as trajectory_direct, built by table lookup alone."""
    _require_odd(x)
    _require_count(max_steps, 1, "max_steps")
    return _run(x, _lookup_step, max_steps)


@dataclass(frozen=True)
class FieldStats:
    minimum: int
    maximum: int
    mean: float


@dataclass(frozen=True)
class TrajectoryStats:
    count: int
    odd_length: FieldStats
    total_divisions: FieldStats
    peak: FieldStats


def trajectory_stats(records: Iterable[TrajectoryRecord]) -> TrajectoryStats:
    """Aggregate min/max/mean over a batch of records; order-independent."""
    batch = list(records)
    if not batch:
        raise DomainError("no trajectory records to summarise")

    def summarise(values: list[int]) -> FieldStats:
        return FieldStats(minimum=min(values), maximum=max(values), mean=sum(values) / len(values))

    return TrajectoryStats(
        count=len(batch),
        odd_length=summarise([r.odd_length for r in batch]),
        total_divisions=summarise([r.total_divisions for r in batch]),
        peak=summarise([r.peak for r in batch]),
    )


def record_json(record: TrajectoryRecord) -> str:
    """One JSON line per trajectory, for streaming output."""
    return json.dumps(
        {
            "start": record.start,
            "iterates": list(record.iterates),
            "alphas": list(record.alphas),
            "odd_length": record.odd_length,
            "total_divisions": record.total_divisions,
            "peak": record.peak,
        },
        separators=(",", ":"),
    )


def stats_csv(stats: TrajectoryStats) -> str:
    """CSV summary with one row per aggregated metric."""
    lines = ["metric,min,max,mean"]
    for name, field in (
        ("odd_length", stats.odd_length),
        ("total_divisions", stats.total_divisions),
        ("peak", stats.peak),
    ):
        lines.append(f"{name},{field.minimum},{field.maximum},{field.mean!r}")
    return "\n".join(lines) + "\n"
