"""Exact character tables of symmetric groups, built level by level.

Each level n is derived from level n-1 alone.  Classes with a fixed point
follow the branching rule; fixed-point-free classes combine the level
below with already-computed values of the same row at reverse-lex-smaller
classes, and end in an integer division that is exact whenever the inputs
are consistent.  All arithmetic is Python big-integer arithmetic.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .partitions import (
    Partition,
    canon,
    decrement_at,
    descents,
    is_partition,
    multiplicity_vector,
    partitions_of,
    weight,
)

__all__ = [
    "CharTable",
    "TableStack",
    "BuildCounters",
    "branching_value",
    "fixed_point_free_value",
    "unified_value",
    "iter_tables",
    "build_table",
    "character_table",
    "character_value",
]


@dataclass(frozen=True)
class CharTable:
    """Character table of one symmetric group.

    Rows are indexed by the character's partition and columns by the
    class's cycle type, both in the same ascending reverse-lex order, so
    the first column is the single-cycle class and the last the identity.
    """

    n: int
    order: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]

    @cached_property
    def index(self) -> dict[Partition, int]:
        return {p: i for i, p in enumerate(self.order)}

    def value(self, alpha: Iterable[int], beta: Iterable[int]) -> int:
        a, b = canon(alpha), canon(beta)
        try:
            return self.values[self.index[a]][self.index[b]]
        except KeyError as exc:
            raise ValueError(f"{exc.args[0]} is not a partition of {self.n}") from None


@dataclass(frozen=True)
class TableStack:
    """Completed tables for S_0 through S_n."""

    tables: tuple[CharTable, ...]

    @property
    def top(self) -> int:
        return len(self.tables) - 1


@dataclass
class BuildCounters:
    """Running totals from table builds; every division performed was exact."""

    exact_divisions: int = 0


def branching_value(alpha: Iterable[int], beta: Iterable[int], prev: CharTable) -> int:
    """Value at a class with a fixed point: drop the fixed point and sum
    the level-below values over the rows of `alpha` with a removable box."""
    a, b = canon(alpha), canon(beta)
    if not b or b[-1] != 1:
        raise ValueError(f"class {b} has no fixed point; use fixed_point_free_value")
    col = prev.index[b[:-1]]
    return sum(prev.values[prev.index[decrement_at(a, i)]][col] for i in descents(a))


def fixed_point_free_value(
    alpha: Iterable[int],
    beta: Iterable[int],
    prev: CharTable,
    partial: Mapping[Partition, int],
    counters: BuildCounters | None = None,
) -> int:
    """Value at a fixed-point-free class (smallest part at least 2).

    Shrinks the smallest part by one and combines the level below with
    already-known values of the same row at reverse-lex-smaller classes,
    which `partial` must contain.  The closing division is exact for
    consistent inputs; a remainder is reported as a hard error instead of
    being rounded away.
    """
    a, b = canon(alpha), canon(beta)
    m = len(b)
    last = b[-1] if b else 0
    if last < 2:
        raise ValueError(f"class {b} has a fixed point; use branching_value")
    reduced = b[:-1] + (last - 1,)
    col = prev.index[reduced]
    bracket = sum(
        (a[i - 1] - i) * prev.values[prev.index[decrement_at(a, i)]][col] for i in descents(a)
    )
    mult = multiplicity_vector(reduced)
    for j in range(1, m):
        if j > 1 and b[j - 1] == b[j - 2]:
            continue  # the first position of each part value carries the whole grouped term
        bumped = b[: j - 1] + (b[j - 1] + 1,) + b[j : m - 1] + (last - 1,)
        assert is_partition(bumped)
        if bumped not in partial:
            raise ValueError(f"missing dependency {bumped} while computing class {b}")
        bracket -= mult[j - 1] * b[j - 1] * partial[bumped]
    quotient, remainder = divmod(bracket, last - 1)
    if remainder:
        raise ArithmeticError(
            f"bracket {bracket} is not divisible by {last - 1} at alpha={a}, beta={b}"
        )
    if counters is not None:
        counters.exact_divisions += 1
    return quotient


def unified_value(
    alpha: Iterable[int],
    beta: Iterable[int],
    prev: CharTable,
    partial: Mapping[Partition, int],
    counters: BuildCounters | None = None,
) -> int:
    """Both recursion cases folded into one formula via a 0/1 switch.

    With the switch off (smallest part 1) the weights collapse to 1 and the
    correction sum disappears, recovering plain branching; with it on the
    fixed-point-free rule reappears.  Kept as an independently coded
    redundancy check against the two-case implementation.
    """
    a, b = canon(alpha), canon(beta)
    m = len(b)
    if not m:
        raise ValueError("the empty class has no recursion step")
    last = b[-1]
    switch = 0 if last == 1 else 1
    reduced = canon(b[:-1] + (last - 1,))
    col = prev.index[reduced]
    bracket = sum(
        (a[i - 1] - i) ** switch * prev.values[prev.index[decrement_at(a, i)]][col]
        for i in descents(a)
    )
    if switch:
        mult = multiplicity_vector(reduced)
        for j in range(1, m):
            if j > 1 and b[j - 1] == b[j - 2]:
                continue
            bumped = b[: j - 1] + (b[j - 1] + 1,) + b[j : m - 1] + (last - 1,)
            if bumped not in partial:
                raise ValueError(f"missing dependency {bumped} while computing class {b}")
            bracket -= mult[j - 1] * b[j - 1] * partial[bumped]
    quotient, remainder = divmod(bracket, last - switch)
    if remainder:
        raise ArithmeticError(
            f"bracket {bracket} is not divisible by {last - switch} at alpha={a}, beta={b}"
        )
    if counters is not None and switch:
        counters.exact_divisions += 1
    return quotient


def _build_level(
    k: int, prev: CharTable | None, threads: int, counters: BuildCounters | None
) -> CharTable:
    parts = partitions_of(k)
    if k == 0:
        return CharTable(0, parts, ((1,),))
    assert prev is not None

    def row_for(alpha: Partition) -> tuple[tuple[int, ...], int]:
        known: dict[Partition, int] = {}
        out: list[int] = []
        local = BuildCounters()
        for beta in parts:
            if beta[-1] == 1:
                v = branching_value(alpha, beta, prev)
            else:
                v = fixed_point_free_value(alpha, beta, prev, known, local)
            known[beta] = v
            out.append(v)
        return tuple(out), local.exact_divisions

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(row_for, parts))
    else:
        results = [row_for(alpha) for alpha in parts]
    if counters is not None:
        counters.exact_divisions += sum(d for _, d in results)
    return CharTable(k, parts, tuple(row for row, _ in results))


def iter_tables(
    n: int, *, threads: int = 1, counters: BuildCounters | None = None
) -> Iterator[CharTable]:
    """Yield the tables for S_0 up to S_n in order.

    Only the level under construction and its predecessor are held, so
    consumers that do not retain the yields run in memory proportional to
    the two largest levels.  Rows within a level are independent; `threads`
    splits them across a thread pool.
    """
    if n < 0:
        raise ValueError(f"no table for negative {n}")
    prev: CharTable | None = None
    for k in range(n + 1):
        prev = _build_level(k, prev, threads, counters)
        yield prev


def build_table(n: int, *, threads: int = 1, counters: BuildCounters | None = None) -> TableStack:
    """Build and keep the whole stack of tables for S_0 through S_n."""
    return TableStack(tuple(iter_tables(n, threads=threads, counters=counters)))


def character_table(
    n: int, *, threads: int = 1, counters: BuildCounters | None = None
) -> CharTable:
    """Build only the table of S_n, discarding the intermediate levels."""
    table: CharTable | None = None
    for table in iter_tables(n, threads=threads, counters=counters):
        pass
    assert table is not None
    return table


def character_value(alpha: Iterable[int], beta: Iterable[int], stack: TableStack) -> int:
    """Irreducible character value read off a completed stack."""
    a, b = canon(alpha), canon(beta)
    wa, wb = weight(a), weight(b)
    if wa != wb:
        raise ValueError(f"weights differ: {wa} and {wb}")
    if wa > stack.top:
        raise ValueError(f"stack only reaches S_{stack.top}, need S_{wa}")
    return stack.tables[wa].value(a, b)
