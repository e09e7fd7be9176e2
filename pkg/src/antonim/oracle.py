"""Ground-truth win/loss classification by memoized backward induction.

Works straight from the definition: a position is P exactly when every
legal move from it reaches an N position; the empty position (no move
available, the mover loses) is P. This module is the referee for the
constructive solver and deliberately knows nothing about the mex
construction used there.
"""

from __future__ import annotations

from typing import Iterator

from .core import CanonicalPosition, Classification

# Entries are write-once: the game is finite and deterministic, so racing
# writers can only store the same value. Plain dict get/set are atomic
# under the GIL, so concurrent callers need no locking.
OracleCache = dict[CanonicalPosition, Classification]

_shared_cache: OracleCache = {}


def successors(pos: CanonicalPosition) -> Iterator[CanonicalPosition]:
    """Canonical positions reachable in one move.

    Enumerates on the canonical form directly: each value x may shrink to
    any v in 0..x-1 that is 0 or absent from the remaining values.
    """
    for i, x in enumerate(pos):
        rest = pos[:i] + pos[i + 1 :]
        yield rest  # take the whole heap; the empty heap drops out
        for v in range(1, x):
            if v not in rest:
                yield tuple(sorted(rest + (v,)))


def oracle_classify(
    pos: CanonicalPosition, cache: OracleCache | None = None
) -> Classification:
    """Classify by exhaustive induction over the game tree.

    Recursion is well-founded: every successor has strictly fewer chips.
    Pass a dict to isolate the memo; by default a process-wide cache is
    shared across calls.
    """
    if cache is None:
        cache = _shared_cache
    pos = tuple(pos)
    hit = cache.get(pos)
    if hit is not None:
        return hit
    result = Classification.P
    for nxt in successors(pos):
        if oracle_classify(nxt, cache) is Classification.P:
            result = Classification.N
            break
    cache[pos] = result
    return result
