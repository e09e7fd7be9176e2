"""Constructive perfect-play solver.

The engine rests on a single operation: ``completion(given)`` returns the
unique value z whose addition turns the given heaps into a P-position. It
is the least non-negative integer outside the exclusion set

    A ∪ given,   A = { completion(r) : r a valid one-heap reduction of given }

where a reduction replaces one given heap x by some v < x (v = 0 empties
it) and is valid when it leaves no duplicated positive heap. Membership in
A is computed through completion itself, never through the game-tree
oracle: each reduction strictly lowers the chip total, so the recursion is
well-founded, and the oracle stays an independent cross-check.

Note the quantifier: reductions take at least one chip (v < x). Allowing
v = x would put the position's own completion value into A and break the
construction.

classify follows from uniqueness: a nonempty canonical position is P
exactly when its largest value equals the completion of the rest. Testing
the maximum keeps the recursive call on the smallest values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from operator import xor
from typing import Sequence

from . import core
from .core import CanonicalPosition, Classification, Move

# Write-once entries (see oracle.OracleCache); shared process-wide by
# default so classify, best_move, and table generation reuse each other's
# work.
CompletionCache = dict[CanonicalPosition, int]

_shared_cache: CompletionCache = {}


class InvalidInput(core.GameError):
    """Raised when a completion input is not a canonical position."""


def _require_canonical(given: tuple[int, ...]) -> None:
    for a, b in zip((0,) + given, given):
        if b <= a:
            raise InvalidInput(
                f"not a canonical position (ascending positives): {given}"
            )


def completion(
    given: Sequence[int], cache: CompletionCache | None = None
) -> int:
    """The unique z making (given..., z) a P-position.

    ``given`` must be a canonical position: strictly ascending positive
    values, possibly empty. The empty input completes to 0.
    """
    given = tuple(given)
    _require_canonical(given)
    if cache is None:
        cache = _shared_cache
    return _completion(given, cache)


def _completion(given: tuple[int, ...], cache: CompletionCache) -> int:
    hit = cache.get(given)
    if hit is not None:
        return hit
    excluded = set(given)
    for j in range(len(given)):
        rest = given[:j] + given[j + 1 :]
        excluded.add(_completion(rest, cache))  # v = 0 empties heap j
        for v in range(1, given[j]):
            if v in rest:
                continue  # would duplicate a positive heap
            excluded.add(_completion(tuple(sorted(rest + (v,))), cache))
    z = 0
    while z in excluded:
        z += 1
    cache[given] = z
    return z


def classify(
    pos: Sequence[int], cache: CompletionCache | None = None
) -> Classification:
    """Fast P/N classification via the completion construction."""
    pos = tuple(pos)
    if not pos:
        return Classification.P
    _require_canonical(pos)
    if cache is None:
        cache = _shared_cache
    if _completion(pos[:-1], cache) == pos[-1]:
        return Classification.P
    return Classification.N


def best_move(
    state: Sequence[int], cache: CompletionCache | None = None
) -> Move | None:
    """A winning move, or None when the mover is already lost.

    From an N-position there is always a move to a P-position; when
    several exist the one least under (heap_index, new_size) ordering is
    returned, for reproducibility.
    """
    state = core.validate_state(state)
    if classify(core.canonicalize(state), cache) is Classification.P:
        return None
    for move in core.legal_moves(state):  # ordered (heap_index, new_size)
        after = core.apply_move(state, move)
        if classify(core.canonicalize(after), cache) is Classification.P:
            return move
    raise RuntimeError(f"no winning move from N-position {state}; solver bug")


def nim_classify(heaps: Sequence[int]) -> Classification:
    """Plain-Nim classification: P exactly when the xor of all heaps is 0."""
    for h in heaps:
        if h < 0:
            raise core.NegativeHeap(h)
    if reduce(xor, heaps, 0) == 0:
        return Classification.P
    return Classification.N


@dataclass
class NimCorrespondenceReport:
    """Outcome of the 3-heap Nim correspondence sweep.

    For two-heap games (x1, x2) the completion z satisfies
    (x1+1) xor (x2+1) xor (z+1) = 0; the correspondence breaks at four
    heaps, which the counterexample part re-confirms: [1,2,5,6] is a Nim
    P-position while the position {1,4,5} (with an empty fourth heap) is
    an N-position here.
    """

    max_value: int
    pairs_checked: int = 0
    mismatches: list[tuple[int, int, int]] = field(default_factory=list)
    counterexample_confirmed: bool = False

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.counterexample_confirmed


def nim_correspondence_check(
    max_value: int, cache: CompletionCache | None = None
) -> NimCorrespondenceReport:
    """Sweep all pairs 0 <= x1 < x2 <= max_value against Bouton's rule.

    x1 < x2 keeps the pair clear of the two-zero degenerate case (the
    all-zero position maps to Nim [1,1,1], where the correspondence does
    not apply); z = 0 alongside x1 = 0 cannot occur because a single
    positive heap is never a P-position.
    """
    if max_value < 1:
        raise InvalidInput(f"max_value must be >= 1, got {max_value}")
    report = NimCorrespondenceReport(max_value=max_value)
    for x2 in range(1, max_value + 1):
        for x1 in range(x2):
            z = completion(core.canonicalize((x1, x2)), cache)
            report.pairs_checked += 1
            if nim_classify((x1 + 1, x2 + 1, z + 1)) is not Classification.P:
                report.mismatches.append((x1, x2, z))
    report.counterexample_confirmed = (
        nim_classify((1, 2, 5, 6)) is Classification.P
        and classify((1, 4, 5), cache) is Classification.N
    )
    return report
