"""Border-strip tests.

The oracle enumerates candidate cell sets directly: it takes every
partition contained in the shape with the right cell-count difference,
forms the skew diagram, and keeps it only if the cells are edge-connected
and contain no 2x2 block.  rim_hooks must list exactly those removals."""

import pytest

from symchar.murnaghan import RimHookRemoval, mn_character_value, mn_table, rim_hooks
from symchar.partitions import partitions_of
from symchar.tables import build_table, character_table


def contained_partitions(shape):
    """Every partition that fits inside `shape`."""
    if not shape:
        return [()]
    out = []

    def go(row, cap, prefix):
        out.append(tuple(prefix))
        if row == len(shape):
            return
        for size in range(min(cap, shape[row]), 0, -1):
            go(row + 1, size, prefix + [size])

    go(0, shape[0] if shape else 0, [])
    return list(dict.fromkeys(out))


def skew_cells(outer, inner):
    inner = inner + (0,) * (len(outer) - len(inner))
    return {
        (r, c)
        for r in range(len(outer))
        for c in range(inner[r], outer[r])
    }


def is_connected(cells):
    if not cells:
        return False
    todo = [next(iter(cells))]
    seen = {todo[0]}
    while todo:
        r, c = todo.pop()
        for nxt in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if nxt in cells and nxt not in seen:
                seen.add(nxt)
                todo.append(nxt)
    return seen == cells


def has_square(cells):
    return any(
        (r + 1, c) in cells and (r, c + 1) in cells and (r + 1, c + 1) in cells
        for r, c in cells
    )


def brute_rim_hooks(shape, length):
    """Strip removals by definition: connected, square-free skew diagrams."""
    out = set()
    for inner in contained_partitions(shape):
        if sum(shape) - sum(inner) != length:
            continue
        cells = skew_cells(shape, inner)
        if not is_connected(cells) or has_square(cells):
            continue
        rows_spanned = {r for r, _ in cells}
        out.add((inner, len(rows_spanned) - 1))
    return out


def as_pairs(removals):
    return {(r.result, r.leg_length) for r in removals}


def test_rim_hooks_match_brute_force():
    shapes = [(), (1,), (3,), (2, 2), (3, 1), (2, 1, 1), (3, 2), (4, 2, 1), (3, 3, 2)]
    for shape in shapes:
        for length in range(1, sum(shape) + 1):
            got = rim_hooks(shape, length)
            assert len(got) == len(as_pairs(got))  # no duplicate removals
            assert as_pairs(got) == brute_rim_hooks(shape, length), (shape, length)


def test_rim_hooks_examples():
    assert as_pairs(rim_hooks((4,), 4)) == {((), 0)}
    assert as_pairs(rim_hooks((2, 2), 2)) == {((2,), 0), ((1, 1), 1)}
    assert as_pairs(rim_hooks((2, 2), 3)) == {((1,), 1)}
    # a 2x2 block is never a strip, and neither is a disconnected pair
    assert rim_hooks((2, 2), 4) == []
    assert rim_hooks((2, 1), 2) == []
    assert rim_hooks((3, 1), 3) == []
    assert rim_hooks((2, 1), 3) == [RimHookRemoval((2, 1), 3, (), 1)]


def test_rim_hooks_record_their_source():
    for removal in rim_hooks((4, 2, 1), 3):
        assert removal.source == (4, 2, 1)
        assert removal.hook_length == 3
        assert sum(removal.source) - sum(removal.result) == 3


def test_rim_hooks_validation():
    with pytest.raises(ValueError):
        rim_hooks((1, 2), 1)
    with pytest.raises(ValueError):
        rim_hooks((2, 1), 0)
    assert rim_hooks((), 1) == []
    assert rim_hooks((2, 2), 5) == []


def test_single_row_and_column_strips():
    for n in range(1, 7):
        assert as_pairs(rim_hooks((n,), n)) == {((), 0)}
        assert as_pairs(rim_hooks((1,) * n, n)) == {((), n - 1)}


def test_mn_character_values():
    assert mn_character_value((2, 2), (3, 1)) == -1
    assert mn_character_value((2, 2), (2, 2)) == 2
    assert mn_character_value((3, 1, 1), (5,)) == 1
    assert mn_character_value((), ()) == 1
    with pytest.raises(ValueError):
        mn_character_value((2, 2), (3,))
    with pytest.raises(ValueError):
        mn_character_value((1, 2), (2, 1))


def test_expansion_order_is_immaterial():
    for n in range(8):
        for alpha in partitions_of(n):
            for beta in partitions_of(n):
                assert mn_character_value(alpha, beta) == mn_character_value(
                    alpha, beta, expand_smallest=True
                ), (alpha, beta)


def test_mn_table_matches_recursion():
    stack = build_table(8)
    for n in range(9):
        assert mn_table(n) == stack.tables[n]


def test_mn_memo_is_shared_and_grows():
    memo = {}
    table = mn_table(6, memo)
    assert table == character_table(6)
    assert len(memo) > len(partitions_of(6)) ** 2 // 2


def test_hooks_alone_survive_the_full_cycle():
    # only hook shapes admit a strip covering the whole diagram
    for n in range(1, 9):
        for alpha in partitions_of(n):
            removals = rim_hooks(alpha, n)
            is_hook = len(alpha) == 0 or alpha[0] + len(alpha) - 1 == n
            if is_hook and n:
                assert as_pairs(removals) == {((), len(alpha) - 1)}
            else:
                assert removals == []
