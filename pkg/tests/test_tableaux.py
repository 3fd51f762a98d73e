from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from baxtab.errors import BadPairing, GuardExceeded, IllegalMove, InvalidPartition, NotFromEmpty
from baxtab.tableaux import (
    EMPTY,
    Partition,
    TableauKind,
    TableauSequence,
    classify_move,
    count_syt_bounded_height,
    enumerate_tableaux,
    final_row_distribution,
    validate_sequence,
)

H = TableauKind.HESITATING
O = TableauKind.OSCILLATING
SYT = TableauKind.STANDARD_YOUNG


def partitions_of(n, max_part=None):
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def hook_count(shape):
    n = sum(shape)
    conj = [sum(1 for p in shape if p > c) for c in range(shape[0])] if shape else []
    hooks = 1
    for r, row in enumerate(shape):
        for c in range(row):
            hooks *= (row - c - 1) + (conj[c] - r - 1) + 1
    return factorial(n) // hooks


def syt_by_hooks(n, h):
    return sum(hook_count(s) for s in partitions_of(n) if len(s) <= h)


class TestPartition:
    def test_rejects_increasing_parts(self):
        with pytest.raises(InvalidPartition):
            Partition((1, 2))

    def test_rejects_zero_part(self):
        with pytest.raises(InvalidPartition):
            Partition((2, 0))

    def test_padded_and_from_padded_round_trip(self):
        p = Partition((3, 1))
        assert p.padded(4) == (3, 1, 0, 0)
        assert Partition.from_padded(p.padded(4)) == p

    def test_empty_is_the_zero_row(self):
        assert Partition.row(0) == EMPTY
        assert EMPTY.is_row() and EMPTY.row_length() == 0 and EMPTY.height() == 0

    def test_addable_and_removable(self):
        p = Partition((2, 2, 1))
        assert p.addable_rows() == [0, 2, 3]
        assert p.removable_rows() == [1, 2]
        assert p.add_box(2) == Partition((2, 2, 2))
        assert p.remove_box(2) == Partition((2, 2))

    def test_str(self):
        assert str(EMPTY) == "∅"
        assert str(Partition((2, 1))) == "(2,1)"


class TestValidate:
    @pytest.mark.parametrize(
        "shapes, height, final",
        [
            ([(), (1,), (), (1,), ()], 1, ()),
            ([(), (), (1,), (2,), (1,)], 1, (1,)),
        ],
    )
    def test_hesitating_examples(self, shapes, height, final):
        info = validate_sequence(TableauSequence.of(H, *shapes))
        assert info.valid
        assert info.max_height == height
        assert info.final_shape == Partition(final)

    def test_standard_young_row(self):
        info = validate_sequence(TableauSequence.of(SYT, (), (1,), (2,)))
        assert info.max_height == 1 and info.final_shape == Partition((2,))

    def test_must_start_empty(self):
        with pytest.raises(NotFromEmpty):
            validate_sequence(TableauSequence.of(O, (1,), ()))

    def test_two_box_jump(self):
        with pytest.raises(IllegalMove):
            validate_sequence(TableauSequence.of(O, (), (2,)))

    def test_standalone_stay_in_hesitating(self):
        # (stay, stay) is not one of the three pair types
        with pytest.raises(BadPairing):
            validate_sequence(TableauSequence.of(H, (), (), ()))

    def test_odd_hesitating_length(self):
        with pytest.raises(BadPairing):
            validate_sequence(TableauSequence.of(H, (), (1,)))

    def test_removal_in_standard_young(self):
        with pytest.raises(IllegalMove):
            validate_sequence(TableauSequence.of(SYT, (), (1,), ()))

    def test_stay_in_oscillating(self):
        with pytest.raises(IllegalMove):
            validate_sequence(TableauSequence.of(O, (), (1,), (1,)))

    def test_classify(self):
        assert classify_move(EMPTY, Partition((1,))) == "add"
        assert classify_move(Partition((1, 1)), Partition((1,))) == "remove"
        assert classify_move(EMPTY, EMPTY) == "stay"

    def test_json_round_trip(self):
        seq = TableauSequence.of(H, (), (), (1,), (1, 1), (1,))
        data = seq.to_json()
        assert data == {"kind": "hesitating", "shapes": [[], [], [1], [1, 1], [1]]}
        assert TableauSequence.from_json(data) == seq


class TestEnumerate:
    def test_table_one_sizes(self):
        seqs = enumerate_tableaux(H, 2, 2, lambda s: s.is_row())
        assert len(seqs) == 6
        assert final_row_distribution(seqs) == {0: 2, 1: 3, 2: 1}

    def test_one_pair(self):
        assert len(enumerate_tableaux(H, 1, 2, lambda s: s.is_row())) == 2

    def test_standard_young_n3(self):
        # three SYT of size 3 with at most two rows, one per sequence of shapes
        assert len(enumerate_tableaux(SYT, 3, 2)) == 3

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            enumerate_tableaux(O, 9, 2)

    @pytest.mark.parametrize("kind, n, k", [(H, 3, 2), (O, 5, 2), (SYT, 5, 3), (H, 3, 1)])
    def test_outputs_are_valid_and_distinct(self, kind, n, k):
        seqs = enumerate_tableaux(kind, n, k)
        assert len(set(seqs)) == len(seqs)
        for s in seqs:
            info = validate_sequence(s)
            assert info.max_height <= k


class TestSytCounts:
    @pytest.mark.parametrize("n, h, expected", [(6, 2, 20), (5, 4, 25), (0, 1, 1), (0, 7, 1)])
    def test_examples(self, n, h, expected):
        assert count_syt_bounded_height(n, h) == expected

    @pytest.mark.parametrize("n", range(10))
    @pytest.mark.parametrize("h", [1, 2, 3, 4])
    def test_against_hook_lengths(self, n, h):
        assert count_syt_bounded_height(n, h) == syt_by_hooks(n, h)

    @pytest.mark.parametrize("n", range(9))
    def test_monotone_and_stable_in_h(self, n):
        counts = [count_syt_bounded_height(n, h) for h in range(1, n + 3)]
        assert counts == sorted(counts)
        stable = max(n, 1)
        assert all(c == count_syt_bounded_height(n, stable) for c in counts[stable - 1:])

    def test_against_enumeration(self):
        for n in range(7):
            assert len(enumerate_tableaux(SYT, n, 3)) == count_syt_bounded_height(n, 3)


def _mutations(seq):
    """Every way of replacing one shape by a shape two boxes away from its predecessor."""
    shapes = list(seq.shapes)
    for i in range(1, len(shapes)):
        prev = shapes[i - 1]
        for r in prev.addable_rows():
            grown = prev.add_box(r)
            for r2 in grown.addable_rows():
                bad = shapes[:i] + [grown.add_box(r2)] + shapes[i + 1:]
                yield TableauSequence(seq.kind, tuple(bad))


@settings(max_examples=60, deadline=None)
@given(kind=st.sampled_from([H, O, SYT]), n=st.integers(1, 4), k=st.integers(1, 3), pick=st.integers(0, 10**6))
def test_one_illegal_move_is_rejected(kind, n, k, pick):
    seqs = enumerate_tableaux(kind, n, k)
    if not seqs:
        return
    seq = seqs[pick % len(seqs)]
    validate_sequence(seq)
    bad = list(_mutations(seq))
    assert bad
    victim = bad[pick % len(bad)]
    with pytest.raises((IllegalMove, BadPairing)):
        validate_sequence(victim)
