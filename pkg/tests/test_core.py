import itertools

import pytest
from hypothesis import given

from antonim.core import (
    DuplicatePositiveHeap,
    EmptyState,
    IllegalMove,
    Move,
    NegativeHeap,
    apply_move,
    canonicalize,
    legal_moves,
    validate_state,
)
from helpers import raw_states


class TestValidateState:
    def test_accepts_distinct_positives_with_zero(self):
        assert validate_state([0, 1, 4, 5]) == (0, 1, 4, 5)

    def test_zeros_may_repeat(self):
        assert validate_state([0, 0, 0]) == (0, 0, 0)

    def test_duplicate_positive_rejected(self):
        with pytest.raises(DuplicatePositiveHeap) as exc:
            validate_state([1, 1, 3])
        assert exc.value.value == 1
        assert "duplicate positive heap: 1" in str(exc.value)

    def test_empty_rejected(self):
        with pytest.raises(EmptyState):
            validate_state([])

    def test_negative_rejected(self):
        with pytest.raises(NegativeHeap):
            validate_state([2, -1])


class TestCanonicalize:
    def test_sorts_and_drops_zeros(self):
        assert canonicalize([5, 0, 1, 3]) == (1, 3, 5)

    def test_all_zeros_is_empty(self):
        assert canonicalize([0, 0, 0]) == ()

    def test_single_positive(self):
        assert canonicalize([2]) == (2,)

    @given(raw_states())
    def test_idempotent(self, state):
        once = canonicalize(state)
        assert canonicalize(once) == once


class TestLegalMoves:
    def test_single_chip(self):
        assert legal_moves((0, 1)) == [Move(1, 0)]

    def test_reduction_onto_other_heap_excluded(self):
        # reducing the 2-heap to 1 would duplicate the 1-heap
        assert legal_moves((1, 2)) == [Move(0, 0), Move(1, 0)]

    def test_terminal_state_has_no_moves(self):
        assert legal_moves((0, 0, 0)) == []

    def test_ordering_is_index_then_size(self):
        moves = legal_moves((3, 5))
        assert moves == sorted(moves)


class TestApplyMove:
    def test_reduces_one_heap(self):
        assert apply_move((0, 1, 4, 5), Move(2, 3)) == (0, 1, 3, 5)

    def test_emptying_a_heap(self):
        assert apply_move((3, 5), Move(0, 0)) == (0, 5)

    def test_positive_duplicate_rejected(self):
        with pytest.raises(IllegalMove) as exc:
            apply_move((3, 5), Move(0, 5))
        assert exc.value.rule == "positive-duplicate"

    def test_growth_rejected(self):
        with pytest.raises(IllegalMove) as exc:
            apply_move((3, 5), Move(0, 4))
        assert exc.value.rule == "growth"

    def test_must_take_a_chip(self):
        with pytest.raises(IllegalMove) as exc:
            apply_move((3, 5), Move(1, 5))
        assert exc.value.rule == "no-chips-taken"

    def test_bad_index_rejected(self):
        with pytest.raises(IllegalMove) as exc:
            apply_move((3, 5), Move(2, 0))
        assert exc.value.rule == "no-such-heap"

    def test_negative_target_rejected(self):
        with pytest.raises(IllegalMove) as exc:
            apply_move((3, 5), Move(0, -1))
        assert exc.value.rule == "negative-size"


@given(raw_states())
def test_moves_keep_state_valid_and_shrink_it(state):
    total = sum(state)
    for move in legal_moves(state):
        after = apply_move(state, move)
        validate_state(after)
        assert sum(after) < total


@given(raw_states())
def test_no_moves_iff_canonically_empty(state):
    assert (legal_moves(state) == []) == (canonicalize(state) == ())


@given(raw_states(max_heaps=4, max_value=8))
def test_successor_positions_ignore_heap_order(state):
    reachable = {
        canonicalize(apply_move(state, m)) for m in legal_moves(state)
    }
    for perm in itertools.permutations(state):
        perm_reachable = {
            canonicalize(apply_move(perm, m)) for m in legal_moves(perm)
        }
        assert perm_reachable == reachable
