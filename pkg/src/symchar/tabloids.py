"""Permutation characters of Young subgroups, by tabloid counting.

A tabloid of a given shape is an ordered sequence of pairwise disjoint
blocks partitioning {1..n}, block i having the prescribed size.  The value
of the permutation character induced from the trivial character of a Young
subgroup equals the number of tabloids the permutation fixes, and a tabloid
is fixed exactly when the support of every cycle lies inside a single
block.  Both implementations below rest on those two facts; the first
enumerates, the second counts.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .partitions import IntSeq, canon

__all__ = ["count_fixed_tabloids", "permutation_character"]


def count_fixed_tabloids(shape: Iterable[int], cycles: Sequence[Sequence[int]]) -> int:
    """Count the tabloids of `shape` fixed by the permutation given as
    disjoint `cycles`, by direct enumeration.

    Blocks are chosen left to right and a branch dies as soon as a block
    meets a cycle without containing it, which is the fixed-tabloid
    criterion applied early instead of moving points one by one.  Still
    exponential in the degree; meant for degrees up to about 10.
    """
    shape = canon(shape)
    supports = [frozenset(c) for c in cycles]
    points = frozenset().union(*supports) if supports else frozenset()
    degree = sum(len(s) for s in supports)
    if len(points) != degree:
        raise ValueError("cycles are not disjoint")
    if sum(shape) != degree:
        raise ValueError(f"shape weight {sum(shape)} differs from permutation degree {degree}")
    if any(part < 0 for part in shape):
        return 0

    def fill(blocks: IntSeq, free: frozenset) -> int:
        if not blocks:
            return 1
        size, rest = blocks[0], blocks[1:]
        total = 0
        for chosen in combinations(sorted(free), size):
            block = frozenset(chosen)
            if all(s <= block for s in supports if s & block):
                total += fill(rest, free - block)
        return total

    return fill(shape, points)


def permutation_character(shape: Iterable[int], cycle_type: Iterable[int]) -> int:
    """Value at `cycle_type` of the permutation character attached to `shape`.

    Equals the number of ways to deal the cycles onto the blocks so that
    block i receives cycles of total length shape[i], computed by dynamic
    programming over the multiset of cycle lengths.  Returns 0 when `shape`
    has a negative entry or the weights differ.  `shape` need not be
    sorted: block order never changes the count, and likewise only the
    multiset of `cycle_type` matters.
    """
    shape = canon(shape)
    ct = canon(cycle_type)
    if any(x < 0 for x in ct):
        raise ValueError("cycle type entries must be nonnegative")
    if any(x < 0 for x in shape):
        return 0
    if sum(shape) != sum(ct):
        return 0
    runs = tuple(sorted(Counter(x for x in ct if x > 0).items(), reverse=True))
    return _deal_count(shape, runs)


@lru_cache(maxsize=None)
def _deal_count(blocks: IntSeq, runs: tuple[tuple[int, int], ...]) -> int:
    # Memo on (next block, remaining multiset), confined to this top call.
    memo: dict = {}

    def fill(bi: int, rem: tuple[tuple[int, int], ...]) -> int:
        if bi == len(blocks):
            assert not rem  # weights match, so every cycle was dealt
            return 1
        key = (bi, rem)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total = 0

        def choose(ri: int, need: int, prefix: tuple, ways: int) -> None:
            nonlocal total
            if need == 0:
                rest = prefix + rem[ri:]
                total += ways * fill(bi + 1, tuple(p for p in rest if p[1]))
                return
            if ri == len(rem):
                return
            val, cnt = rem[ri]
            for take in range(min(cnt, need // val) + 1):
                choose(ri + 1, need - take * val, prefix + ((val, cnt - take),), ways * comb(cnt, take))

        choose(0, blocks[bi], (), 1)
        memo[key] = total
        return total

    return fill(0, runs)
