"""Murnaghan-Nakayama evaluation, used as an independent cross-check.

Character values are expanded by repeatedly stripping a connected border
strip whose length is one part of the cycle type, each removal signed by
the parity of the number of row-to-row steps the strip makes.  Nothing
here touches the recursion engine; agreement between the two is one of the
strongest end-to-end checks in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .partitions import Partition, canon, is_partition, partitions_of, weight
from .tables import CharTable

__all__ = ["RimHookRemoval", "rim_hooks", "mn_character_value", "mn_table"]


@dataclass(frozen=True)
class RimHookRemoval:
    """One way of deleting a connected border strip from a diagram."""

    source: Partition
    hook_length: int
    result: Partition
    leg_length: int


def rim_hooks(shape: Iterable[int], length: int) -> list[RimHookRemoval]:
    """All removals of a connected border strip of `length` cells.

    A strip is a connected run along the south-east border containing no
    2x2 block, so it is determined by the rows it spans: in every spanned
    row above the last it reaches from just past the next row's end to the
    row's own end, and in the last row it covers a free stretch ending at
    the row's end.  For each candidate span the starting column in the last
    row is forced by the cell count, leaving only bound checks.  Leg length
    is the number of rows spanned minus one.
    """
    s = canon(shape)
    if not is_partition(s):
        raise ValueError(f"{s} is not a partition")
    if length < 1:
        raise ValueError(f"strip length must be positive, got {length}")
    rows = len(s)
    out: list[RimHookRemoval] = []
    for i in range(1, rows + 1):
        for j in range(i, rows + 1):
            below = s[j] if j < rows else 0
            start_col = s[i - 1] + (j - i) + 1 - length
            if start_col < max(1, below + 1) or start_col > s[j - 1]:
                continue
            trimmed = list(s)
            for k in range(i, j):
                trimmed[k - 1] = s[k] - 1
            trimmed[j - 1] = start_col - 1
            out.append(RimHookRemoval(s, length, canon(trimmed), j - i))
    return out


def mn_character_value(
    alpha: Iterable[int], beta: Iterable[int], *, expand_smallest: bool = False
) -> int:
    """Irreducible character value by border-strip expansion.

    Parts of `beta` are stripped largest first (smallest first with
    `expand_smallest`, for consistency testing; the value is the same).
    """
    a, b = canon(alpha), canon(beta)
    if not is_partition(a) or not is_partition(b):
        raise ValueError(f"{a} and {b} must both be partitions")
    if weight(a) != weight(b):
        raise ValueError(f"weights differ: {weight(a)} and {weight(b)}")
    return _expand(a, tuple(sorted(b, reverse=True)), {}, expand_smallest)


def mn_table(n: int, memo: dict | None = None) -> CharTable:
    """Full character table computed purely by border-strip expansion.

    The memo spans the whole build; pass a dict to inspect how many
    distinct evaluations occurred.
    """
    parts = partitions_of(n)
    if memo is None:
        memo = {}
    values = tuple(
        tuple(_expand(a, b, memo, False) for b in parts) for a in parts
    )
    return CharTable(n, parts, values)


def _expand(
    alpha: Partition, remaining: tuple[int, ...], memo: dict, smallest: bool
) -> int:
    if not remaining:
        assert not alpha
        return 1
    key = (alpha, remaining, smallest)
    cached = memo.get(key)
    if cached is not None:
        return cached
    if smallest:
        part, rest = remaining[-1], remaining[:-1]
    else:
        part, rest = remaining[0], remaining[1:]
    total = 0
    for removal in rim_hooks(alpha, part):
        sub = _expand(removal.result, rest, memo, smallest)
        total += -sub if removal.leg_length % 2 else sub
    memo[key] = total
    return total
