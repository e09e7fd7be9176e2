"""Rules of Antonim: Nim with the extra rule that no two nonempty heaps
may hold the same number of chips.

A state is an ordered tuple of chip counts. Strictly positive heap sizes
must be pairwise distinct; empty heaps may repeat (on the number-line
reading, coins stack on the 0 space). A move takes at least one chip from
a single heap and may not leave two equal nonempty heaps. The player who
cannot move loses.

Heap sizes are plain Python ints; the solver and tables are only exercised
at desk scale, so no big-integer handling beyond what int gives for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

# Ordered heap tuple as the user sees it (indices matter for play).
RawState = tuple[int, ...]
# Solver key: strictly ascending positive heap sizes, zeros dropped.
CanonicalPosition = tuple[int, ...]


class Classification(str, Enum):
    """Win/loss label of a position for the player about to move."""

    P = "P"  # previous player wins: the mover loses under perfect play
    N = "N"  # next player (the mover) wins

    __str__ = str.__str__


class GameError(Exception):
    """Base class for rule violations and malformed states."""


class EmptyState(GameError):
    def __init__(self) -> None:
        super().__init__("a state needs at least one heap")


class NegativeHeap(GameError):
    def __init__(self, value: int) -> None:
        super().__init__(f"negative heap size: {value}")
        self.value = value


class DuplicatePositiveHeap(GameError):
    def __init__(self, value: int) -> None:
        super().__init__(f"duplicate positive heap: {value}")
        self.value = value


class IllegalMove(GameError):
    """A move that violates the rules; ``rule`` names which one."""

    def __init__(self, rule: str, detail: str = "") -> None:
        message = f"illegal move ({rule})"
        if detail:
            message += f": {detail}"
        super().__init__(message)
        self.rule = rule


@dataclass(frozen=True, order=True)
class Move:
    """Reduce the heap at ``heap_index`` to ``new_size`` chips."""

    heap_index: int
    new_size: int


def validate_state(heaps: Sequence[int]) -> RawState:
    """Check heap sizes and return them as an immutable state tuple."""
    state = tuple(heaps)
    if not state:
        raise EmptyState()
    seen: set[int] = set()
    for h in state:
        if h < 0:
            raise NegativeHeap(h)
        if h > 0:
            if h in seen:
                raise DuplicatePositiveHeap(h)
            seen.add(h)
    return state


def canonicalize(heaps: Sequence[int]) -> CanonicalPosition:
    """Sorted positive heap sizes; zero heaps admit no moves and drop out."""
    return tuple(sorted(h for h in heaps if h > 0))


def legal_moves(state: Sequence[int]) -> list[Move]:
    """All legal moves, ordered by (heap_index, new_size) ascending.

    Reducing heap i to v is legal when v < state[i] and v is either 0 or
    different from every other heap's size.
    """
    taken = set(state)
    moves: list[Move] = []
    for i, size in enumerate(state):
        for v in range(size):
            # v < size, so v can only collide with a *different* heap
            if v == 0 or v not in taken:
                moves.append(Move(i, v))
    return moves


def apply_move(state: Sequence[int], move: Move) -> RawState:
    """Apply a move, validating it against the rules first."""
    state = tuple(state)
    i, v = move.heap_index, move.new_size
    if not 0 <= i < len(state):
        raise IllegalMove("no-such-heap", f"index {i} out of range")
    if v < 0:
        raise IllegalMove("negative-size", f"cannot shrink a heap to {v}")
    # the distinctness rule outranks the size checks when both apply
    if v > 0 and any(state[j] == v for j in range(len(state)) if j != i):
        raise IllegalMove("positive-duplicate", f"another heap already holds {v}")
    if v > state[i]:
        raise IllegalMove("growth", f"heap {i} has {state[i]} chips, not {v}")
    if v == state[i]:
        raise IllegalMove("no-chips-taken", f"heap {i} already holds {v}")
    return state[:i] + (v,) + state[i + 1 :]
