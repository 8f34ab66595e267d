"""Integer-sequence and partition foundations.

Sequences are finitely supported integer vectors stored as tuples with
trailing zeros stripped (the canonical form); positions are spoken of
1-based in docstrings.  Partitions are the weakly decreasing nonnegative
sequences and double as cycle types of permutations.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import Iterable

IntSeq = tuple[int, ...]
Partition = tuple[int, ...]

__all__ = [
    "IntSeq",
    "Partition",
    "ClassInfo",
    "canon",
    "weight",
    "is_partition",
    "descents",
    "revlex_cmp",
    "partitions_of",
    "multiplicity_vector",
    "increment_at",
    "decrement_at",
    "canonical_permutation",
    "class_info",
    "partition_text",
    "parse_partition_text",
]


def canon(seq: Iterable[int]) -> IntSeq:
    """Canonical form of a finitely supported sequence: trailing zeros dropped."""
    s = tuple(seq)
    end = len(s)
    while end > 0 and s[end - 1] == 0:
        end -= 1
    return s[:end]


def weight(seq: Iterable[int]) -> int:
    """Sum of the entries; may be negative for general sequences."""
    return sum(seq)


def is_partition(seq: Iterable[int]) -> bool:
    """True iff the entries are weakly decreasing and nonnegative."""
    s = canon(seq)
    if not s:
        return True
    return s[-1] >= 0 and all(a >= b for a, b in zip(s, s[1:]))


def descents(seq: Iterable[int]) -> list[int]:
    """1-based positions whose entry strictly exceeds the next one.

    The sequence is read as continuing with zeros, so the last positive
    entry of a partition is always a descent.  For a partition these are
    the rows with a removable corner.
    """
    s = canon(seq)
    return [i for i in range(1, len(s) + 1) if s[i - 1] > (s[i] if i < len(s) else 0)]


def revlex_cmp(delta: Iterable[int], beta: Iterable[int]) -> int:
    """Compare equal-weight partitions reverse-lexicographically: -1, 0 or 1.

    The partition with the larger part at the first disagreement is the
    smaller one, so (n) is least and (1,...,1) greatest among partitions
    of n.
    """
    d, b = canon(delta), canon(beta)
    wd, wb = weight(d), weight(b)
    if wd != wb:
        raise ValueError(f"cannot compare partitions of different weights {wd} and {wb}")
    for x, y in zip_longest(d, b, fillvalue=0):
        if x != y:
            return -1 if x > y else 1
    return 0


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, ascending in reverse-lex order, beginning with (n)."""
    if n < 0:
        raise ValueError(f"cannot partition {n}")
    out: list[Partition] = []

    def emit(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            emit(remaining - part, part, prefix)
            prefix.pop()

    emit(n, n, [])
    return tuple(out)


def multiplicity_vector(gamma: Iterable[int]) -> tuple[int, ...]:
    """For each position, how often its entry occurs in the whole sequence."""
    g = canon(gamma)
    if not g:
        raise ValueError("the zero sequence has no multiplicity vector")
    counts = Counter(g)
    return tuple(counts[x] for x in g)


def increment_at(seq: Iterable[int], i: int) -> IntSeq:
    """Add 1 at 1-based position i, extending with zeros if needed."""
    if i < 1:
        raise ValueError(f"position must be at least 1, got {i}")
    s = list(canon(seq))
    while len(s) < i:
        s.append(0)
    s[i - 1] += 1
    return canon(s)


def decrement_at(seq: Iterable[int], i: int) -> IntSeq:
    """Subtract 1 at 1-based position i, extending with zeros if needed."""
    if i < 1:
        raise ValueError(f"position must be at least 1, got {i}")
    s = list(canon(seq))
    while len(s) < i:
        s.append(0)
    s[i - 1] -= 1
    return canon(s)


def canonical_permutation(beta: Iterable[int]) -> list[tuple[int, ...]]:
    """Disjoint cycles of the standard representative of a cycle type.

    Part j acts on the j-th consecutive block of {1..n}, so (2,1) yields
    [(1, 2), (3,)].  Zero parts contribute no cycle.
    """
    cycles: list[tuple[int, ...]] = []
    start = 1
    for part in canon(beta):
        if part < 0:
            raise ValueError("cycle type entries must be nonnegative")
        if part:
            cycles.append(tuple(range(start, start + part)))
        start += part
    return cycles


@dataclass(frozen=True)
class ClassInfo:
    """Size data of one conjugacy class of a symmetric group."""

    cycle_type: Partition
    centralizer_order: int
    class_size: int


def class_info(beta: Iterable[int]) -> ClassInfo:
    """Exact centralizer order and class size for a cycle type."""
    b = canon(beta)
    if not is_partition(b):
        raise ValueError(f"{b} is not a partition")
    n = weight(b)
    cent = 1
    for part, mult in Counter(b).items():
        cent *= part**mult * math.factorial(mult)
    return ClassInfo(b, cent, math.factorial(n) // cent)


def partition_text(p: Iterable[int]) -> str:
    """Comma-separated parts; the empty partition is the empty string."""
    return ",".join(str(x) for x in canon(p))


def parse_partition_text(text: str) -> Partition:
    """Inverse of partition_text.

    Rejects non-positive parts; parts out of order are refused with the
    sorted form suggested rather than silently reordered.
    """
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}: parts must be integers") from None
    if any(x < 1 for x in parts):
        raise ValueError(f"cannot parse partition {text!r}: parts must be positive")
    if any(a < b for a, b in zip(parts, parts[1:])):
        hint = ",".join(str(x) for x in sorted(parts, reverse=True))
        raise ValueError(f"partition {text!r} is not weakly decreasing; did you mean {hint!r}?")
    return parts
