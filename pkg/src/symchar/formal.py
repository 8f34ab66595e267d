"""Formal integer combinations of sequence-indexed symbols.

Two flavors appear.  Upper sums are indexed by arbitrary finitely supported
integer sequences; lower sums by nonnegative ones.  A bilinear pairing
evaluates the permutation character of the upper index at the lower index,
the step operators below are adjoint for it, and the alternating
determinant operator turns permutation characters into irreducible ones.
Everything here is an exact small-scale oracle, not a production path.

A formal sum is a plain dict from canonical index tuples to nonzero
integer coefficients.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable

from .partitions import IntSeq, Partition, canon, decrement_at, increment_at
from .tabloids import permutation_character

FormalSum = dict[IntSeq, int]

__all__ = [
    "FormalSum",
    "formal_sum",
    "pairing",
    "lowering_op",
    "raising_op",
    "determinant_op",
    "signed_permutations",
    "determinantal_character",
    "straighten",
]


def formal_sum(terms: Iterable[tuple[Iterable[int], int]]) -> FormalSum:
    """Collect (index, coefficient) pairs into a zero-free dict."""
    out: FormalSum = {}
    for seq, coeff in terms:
        _add(out, canon(seq), coeff)
    return out


def _add(out: FormalSum, key: IntSeq, coeff: int) -> None:
    c = out.get(key, 0) + coeff
    if c:
        out[key] = c
    elif key in out:
        del out[key]


def _check_upper(a: FormalSum, bound: int) -> None:
    for key in a:
        if len(key) > bound:
            raise ValueError(f"index {key} is longer than the declared bound {bound}")


def _check_lower(b: FormalSum, bound: int) -> None:
    for key in b:
        if len(key) > bound:
            raise ValueError(f"index {key} is longer than the declared bound {bound}")
        if any(e < 0 for e in key):
            raise ValueError(f"lower-sum index {key} has a negative entry")


def pairing(a: FormalSum, b: FormalSum) -> int:
    """Bilinear pairing of an upper and a lower sum.

    On basis symbols it is the permutation character of the upper index at
    the class of the lower index; lower indices are sorted into a cycle
    type first.  Index pairs of different weights contribute zero.
    """
    for key in b:
        if any(e < 0 for e in key):
            raise ValueError(f"lower-sum index {key} has a negative entry")
    total = 0
    for gamma, ca in a.items():
        wg = sum(gamma)
        for delta, cb in b.items():
            if sum(delta) != wg:
                continue
            total += ca * cb * permutation_character(gamma, tuple(sorted(delta, reverse=True)))
    return total


def lowering_op(bound: int, a: FormalSum) -> FormalSum:
    """Down-step on upper sums: each index loses 1 at one of the first
    `bound` positions, the term weighted by (entry - 1)."""
    _check_upper(a, bound)
    out: FormalSum = {}
    for gamma, c in a.items():
        for i in range(1, bound + 1):
            entry = gamma[i - 1] if i <= len(gamma) else 0
            if entry == 1:
                continue
            _add(out, decrement_at(gamma, i), c * (entry - 1))
    return out


def raising_op(bound: int, b: FormalSum) -> FormalSum:
    """Up-step on lower sums: each index gains 1 at one of the first
    `bound` positions, the term weighted by the entry itself."""
    _check_lower(b, bound)
    out: FormalSum = {}
    for beta, c in b.items():
        for j in range(1, min(bound, len(beta)) + 1):
            if beta[j - 1]:
                _add(out, increment_at(beta, j), c * beta[j - 1])
    return out


@lru_cache(maxsize=None)
def signed_permutations(size: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """All permutations of (1..size) paired with their parity signs."""
    out = []
    for perm in permutations(range(1, size + 1)):
        inversions = sum(
            1 for x in range(size) for y in range(x + 1, size) if perm[x] > perm[y]
        )
        out.append((-1 if inversions % 2 else 1, perm))
    return tuple(out)


def determinant_op(bound: int, a: FormalSum) -> FormalSum:
    """Alternating sum over rearrangements of the first `bound` positions:
    each permutation p sends an index g to g + p - (1,...,1), signed by the
    parity of p.  Enumerates all bound! permutations, so keep bound small."""
    _check_upper(a, bound)
    out: FormalSum = {}
    for gamma, c in a.items():
        pad = gamma + (0,) * (bound - len(gamma))
        for sign, perm in signed_permutations(bound):
            key = canon(pad[j] + perm[j] - 1 for j in range(bound))
            _add(out, key, sign * c)
    return out


def determinantal_character(alpha: Iterable[int], beta: Iterable[int], size: int | None = None) -> int:
    """Irreducible character value built as a signed sum of permutation
    characters over staircase-shifted indices.

    `size` is how many leading positions the alternating sum runs over; any
    value covering the whole index gives the same answer (the default is
    the index length).  Factorial in `size`: an oracle, not an engine.
    """
    a = canon(alpha)
    b = canon(beta)
    if any(e < 0 for e in b):
        raise ValueError(f"class index {b} has a negative entry")
    if sum(a) != sum(b):
        raise ValueError(f"weights differ: {sum(a)} and {sum(b)}")
    if size is None:
        size = len(a)
    elif size < len(a):
        raise ValueError(f"size {size} does not cover the index {a}")
    pad = a + (0,) * (size - len(a))
    base = canon(pad[j] - j for j in range(size))
    return pairing(determinant_op(size, {base: 1}), {b: 1})


def straighten(gamma: Iterable[int]) -> tuple[int, Partition] | None:
    """Rewrite a determinantal index as a signed partition, or None if the
    character it denotes vanishes.

    The adjacent rewrite (a, b) -> (b - 1, a + 1) swaps the staircase-shifted
    entries entry - position, so sorting those decides everything: a repeat
    means the character is zero, as does a sorted result with a negative
    entry; otherwise the sign is the parity of the sort.
    """
    g = canon(gamma)
    size = len(g)
    shifted = [g[j] - (j + 1) for j in range(size)]
    if len(set(shifted)) < size:
        return None
    if size and min(shifted) < -size:
        return None  # would collide with the all-zero tail of the sequence
    order = sorted(range(size), key=lambda j: shifted[j], reverse=True)
    inversions = sum(
        1 for x in range(size) for y in range(x + 1, size) if order[x] > order[y]
    )
    result = canon(shifted[order[k]] + (k + 1) for k in range(size))
    return (-1 if inversions % 2 else 1, result)
