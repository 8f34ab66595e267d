"""Executable checks of the identities the engine rests on.

Every check returns a CheckReport carrying its parameters, a pass flag and,
on failure, a counterexample naming the offending entry, so a corrupted
table cannot slip through silently.  Randomized checks record their seed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .formal import (
    FormalSum,
    determinant_op,
    lowering_op,
    pairing,
    raising_op,
)
from .murnaghan import mn_table
from .partitions import (
    Partition,
    canon,
    class_info,
    decrement_at,
    descents,
    increment_at,
    partition_text,
    partitions_of,
)
from .tables import CharTable, TableStack, build_table
from .tabloids import permutation_character

__all__ = [
    "CheckReport",
    "CHECK_NAMES",
    "check_perm_reciprocity",
    "check_irr_reciprocity",
    "check_adjoint",
    "check_commute",
    "check_chi_equals_zeta",
    "check_orthogonality",
    "check_against_mn",
    "check_ncycle",
    "standard_suite",
]

CHECK_NAMES = (
    "perm",
    "irr",
    "adjoint",
    "commute",
    "chi",
    "orthogonality",
    "mn",
    "ncycle",
)


@dataclass
class CheckReport:
    """Outcome of one verification run."""

    name: str
    params: dict
    passed: bool
    counterexample: dict | None = None
    seed: int | None = None

    def to_json(self) -> dict:
        obj: dict = {"check": self.name, "params": self.params, "pass": self.passed}
        if self.counterexample is not None:
            obj["counterexample"] = self.counterexample
        if self.seed is not None:
            obj["seed"] = self.seed
        return obj


def _entry(alpha, beta, expected, actual) -> dict:
    return {
        "alpha": partition_text(alpha),
        "beta": partition_text(beta),
        "expected": str(expected),
        "actual": str(actual),
    }


def check_perm_reciprocity(n: int) -> CheckReport:
    """Pushing one box down through the character index agrees with pushing
    one box up through the class index, for permutation characters."""
    params = {"n": n}
    for alpha in partitions_of(n):
        for beta in partitions_of(n - 1):
            lhs = sum(
                (alpha[i - 1] - 1) * permutation_character(decrement_at(alpha, i), beta)
                for i in range(1, len(alpha) + 1)
            )
            rhs = sum(
                beta[j - 1] * permutation_character(alpha, increment_at(beta, j))
                for j in range(1, len(beta) + 1)
            )
            if lhs != rhs:
                return CheckReport("perm_reciprocity", params, False, _entry(alpha, beta, lhs, rhs))
    return CheckReport("perm_reciprocity", params, True)


def check_irr_reciprocity(n: int, stack: TableStack | None = None) -> CheckReport:
    """The same two-sided box move for irreducible characters, with the
    down-step restricted to removable corners and staircase weights."""
    if stack is None:
        stack = build_table(n)
    prev, cur = stack.tables[n - 1], stack.tables[n]
    params = {"n": n}
    for alpha in partitions_of(n):
        row = cur.values[cur.index[alpha]]
        for beta in partitions_of(n - 1):
            col = prev.index[beta]
            lhs = sum(
                (alpha[i - 1] - i) * prev.values[prev.index[decrement_at(alpha, i)]][col]
                for i in descents(alpha)
            )
            rhs = sum(
                beta[j - 1] * row[cur.index[tuple(sorted(increment_at(beta, j), reverse=True))]]
                for j in range(1, len(beta) + 1)
            )
            if lhs != rhs:
                return CheckReport("irr_reciprocity", params, False, _entry(alpha, beta, lhs, rhs))
    return CheckReport("irr_reciprocity", params, True)


def _random_index(rng: random.Random, max_len: int, low: int, high: int) -> tuple[int, ...]:
    while True:
        size = rng.randint(0, max_len)
        seq = canon(tuple(rng.randint(low, high) for _ in range(size)))
        if abs(sum(seq)) <= 8:
            return seq


def _random_sum(rng: random.Random, max_len: int, low: int, high: int) -> FormalSum:
    out: FormalSum = {}
    for _ in range(rng.randint(1, 3)):
        idx = _random_index(rng, max_len, low, high)
        coeff = rng.choice((-3, -2, -1, 1, 2, 3))
        c = out.get(idx, 0) + coeff
        if c:
            out[idx] = c
        elif idx in out:
            del out[idx]
    return out


def _sum_text(s: FormalSum) -> str:
    if not s:
        return "0"
    return " + ".join(f"{c}*x[{partition_text(k) or '0'}]" for k, c in sorted(s.items()))


def check_adjoint(l: int, m: int, trials: int = 100, seed: int = 0) -> CheckReport:
    """The down-step on upper sums and the up-step on lower sums are
    adjoint for the pairing, tested on random sparse sums."""
    rng = random.Random(seed)
    params = {"l": l, "m": m, "trials": trials}
    for trial in range(trials):
        a = _random_sum(rng, l, -2, 5)
        b = _random_sum(rng, m, 0, 5)
        lhs = pairing(lowering_op(l, a), b)
        rhs = pairing(a, raising_op(m, b))
        if lhs != rhs:
            ce = {
                "trial": trial,
                "a": _sum_text(a),
                "b": _sum_text(b),
                "expected": str(lhs),
                "actual": str(rhs),
            }
            return CheckReport("adjoint", params, False, ce, seed)
    return CheckReport("adjoint", params, True, None, seed)


def check_commute(l: int, trials: int = 100, seed: int = 0) -> CheckReport:
    """The determinant operator commutes with the down-step on upper sums."""
    rng = random.Random(seed)
    params = {"l": l, "trials": trials}
    for trial in range(trials):
        a = {_random_index(rng, l, -2, 5): 1}
        lhs = determinant_op(l, lowering_op(l, a))
        rhs = lowering_op(l, determinant_op(l, a))
        if lhs != rhs:
            ce = {
                "trial": trial,
                "a": _sum_text(a),
                "expected": _sum_text(lhs),
                "actual": _sum_text(rhs),
            }
            return CheckReport("commute", params, False, ce, seed)
    return CheckReport("commute", params, True, None, seed)


def check_chi_equals_zeta(n: int, stack: TableStack | None = None) -> CheckReport:
    """The determinantal construction reproduces the recursion's table.

    Factorial in the index length; intended for n up to about 8.
    """
    if stack is None:
        stack = build_table(n)
    table = stack.tables[n]
    params = {"n": n}
    for alpha in partitions_of(n):
        size = len(alpha)
        base = canon(alpha[j] - j for j in range(size))
        det = determinant_op(size, {base: 1})
        # Indices with negative entries pair to zero; drop them once per row.
        live = [(idx, c) for idx, c in det.items() if not idx or min(idx) >= 0]
        row = table.values[table.index[alpha]]
        for col, beta in enumerate(table.order):
            val = sum(c * permutation_character(idx, beta) for idx, c in live)
            if val != row[col]:
                return CheckReport("chi_equals_zeta", params, False, _entry(alpha, beta, val, row[col]))
    return CheckReport("chi_equals_zeta", params, True)


def check_orthogonality(table: CharTable) -> CheckReport:
    """First and second orthogonality relations, exactly."""
    n = table.n
    params = {"n": n}
    parts = table.order
    count = len(parts)
    sizes = [class_info(b).class_size for b in parts]
    order = math.factorial(n)
    for i in range(count):
        for g in range(i, count):
            total = sum(sizes[k] * table.values[i][k] * table.values[g][k] for k in range(count))
            expected = order if i == g else 0
            if total != expected:
                ce = {
                    "kind": "row",
                    "alpha": partition_text(parts[i]),
                    "gamma": partition_text(parts[g]),
                    "expected": str(expected),
                    "actual": str(total),
                }
                return CheckReport("orthogonality", params, False, ce)
    for j in range(count):
        cent = class_info(parts[j]).centralizer_order
        for h in range(j, count):
            total = sum(table.values[i][j] * table.values[i][h] for i in range(count))
            expected = cent if j == h else 0
            if total != expected:
                ce = {
                    "kind": "column",
                    "beta": partition_text(parts[j]),
                    "gamma": partition_text(parts[h]),
                    "expected": str(expected),
                    "actual": str(total),
                }
                return CheckReport("orthogonality", params, False, ce)
    return CheckReport("orthogonality", params, True)


def check_against_mn(table: CharTable) -> CheckReport:
    """Entrywise agreement with the border-strip evaluation."""
    params = {"n": table.n}
    other = mn_table(table.n)
    for i, alpha in enumerate(table.order):
        for j, beta in enumerate(table.order):
            if table.values[i][j] != other.values[i][j]:
                ce = _entry(alpha, beta, other.values[i][j], table.values[i][j])
                return CheckReport("against_mn", params, False, ce)
    return CheckReport("against_mn", params, True)


def check_ncycle(table: CharTable) -> CheckReport:
    """The single-cycle column is supported on hook partitions with
    alternating signs and vanishes elsewhere."""
    n = table.n
    params = {"n": n}
    col = table.index[canon((n,))]
    for i, alpha in enumerate(table.order):
        if not alpha:
            expected = 1
        elif all(part == 1 for part in alpha[1:]):
            expected = -1 if (len(alpha) - 1) % 2 else 1
        else:
            expected = 0
        actual = table.values[i][col]
        if actual != expected:
            return CheckReport("ncycle", params, False, _entry(alpha, (n,), expected, actual))
    return CheckReport("ncycle", params, True)


def standard_suite(
    n: int,
    checks: Sequence[str] = CHECK_NAMES,
    *,
    seed: int = 0,
    threads: int = 1,
) -> Iterator[CheckReport]:
    """Yield reports for the selected checks at every applicable size up to n.

    The determinantal comparison is capped at size 8 because of its
    factorial cost; the random operator checks run once, not per size.
    """
    selected = set(checks)
    unknown = selected - set(CHECK_NAMES)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    needs_stack = selected & {"irr", "chi", "orthogonality", "mn", "ncycle"}
    stack = build_table(n, threads=threads) if needs_stack else None
    if "adjoint" in selected:
        yield check_adjoint(4, 4, trials=100, seed=seed)
    if "commute" in selected:
        yield check_commute(4, trials=100, seed=seed)
    for k in range(1, n + 1):
        if "perm" in selected:
            yield check_perm_reciprocity(k)
        if "irr" in selected:
            yield check_irr_reciprocity(k, stack)
        if "chi" in selected and k <= 8:
            yield check_chi_equals_zeta(k, stack)
        if "orthogonality" in selected:
            yield check_orthogonality(stack.tables[k])
        if "mn" in selected:
            yield check_against_mn(stack.tables[k])
        if "ncycle" in selected:
            yield check_ncycle(stack.tables[k])
